use std::collections::BTreeSet;
use std::fmt::{Display, Write};

use serde::{Deserialize, Serialize};

use super::catalog::Catalog;
use crate::geometry::{
    dual, perp, verify_gq, GqOrder, HyperplaneKind, PointLineGeometry, PointSet, TriadKind,
};
use crate::gf2::ProjectiveSpace;
use crate::pauli::{commutes, interpret_hyperplane, mermin_square, product, Table2Tag};
use crate::veldkamp::{check_third_member_rule, Composition, LineType};
use crate::w2::{
    automorphism_count, build_w2_symplectic, fano_plane_at, find_isomorphism, LabeledW2, Model,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    fn new() -> Self {
        Self {
            checks: Vec::new(),
            overall: true,
        }
    }

    fn record(&mut self, name: &str, expected: String, actual: String, pass: bool) -> bool {
        self.overall &= pass;
        self.checks.push(Check {
            name: name.to_string(),
            expected,
            actual,
            pass,
        });
        pass
    }

    fn expect<T: Display + PartialEq>(&mut self, name: &str, expected: T, actual: T) -> bool {
        let pass = expected == actual;
        self.record(name, expected.to_string(), actual.to_string(), pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "[{tag}] {}: expected {}, actual {}",
                c.name, c.expected, c.actual
            );
        }
        match self.first_failure() {
            None => {
                let _ = writeln!(
                    out,
                    "overall: PASS ({}/{} checks)",
                    self.passed(),
                    self.checks.len()
                );
            }
            Some(c) => {
                let _ = writeln!(
                    out,
                    "overall: FAIL ({}/{} checks); first failure: {}: expected {}, actual {}",
                    self.passed(),
                    self.checks.len(),
                    c.name,
                    c.expected,
                    c.actual
                );
            }
        }
        out
    }
}

/// Knobs for [`run_verification`].
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Sabotage hook: remove this line from W(2) before checking.
    #[doc(hidden)]
    pub drop_line: Option<usize>,
}

fn order_text(r: &Result<GqOrder, crate::geometry::GqViolation>) -> String {
    match r {
        Ok(o) => format!("({}, {})", o.s, o.t),
        Err(v) => v.to_string(),
    }
}

fn gq_22() -> String {
    "(2, 2)".to_string()
}

/// Runs every count and structural check. Stops early when W(2) itself fails
/// to be a GQ(2,2), since nothing downstream is meaningful then.
pub fn run_verification(opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::new();
    let w2 = build_w2_symplectic();
    let geometry = match opts.drop_line {
        None => w2.geometry().clone(),
        Some(i) => match w2.geometry().without_line(i) {
            Ok(g) => g,
            Err(e) => {
                report.record(
                    "fault injection",
                    format!("line {i} removed"),
                    e.to_string(),
                    false,
                );
                return report;
            }
        },
    };
    let gq = report.expect(
        "W(2) symplectic GQ order",
        gq_22(),
        order_text(&verify_gq(&geometry)),
    );
    report.expect("W(2) symplectic points", 15, geometry.num_points());
    report.expect("W(2) symplectic lines", 15, geometry.num_lines());
    if !gq {
        return report;
    }
    let w2 = match LabeledW2::new(geometry, w2.labels().to_vec(), Model::Symplectic) {
        Ok(w) => w,
        Err(e) => {
            report.record(
                "W(2) symplectic labels",
                "valid".into(),
                e.to_string(),
                false,
            );
            return report;
        }
    };
    let cat = match Catalog::from_w2(w2) {
        Ok(c) => c,
        Err(e) => {
            report.record("model catalog", "built".into(), e.to_string(), false);
            return report;
        }
    };
    models(&mut report, &cat);
    hyperplanes(&mut report, &cat);
    triads(&mut report, &cat);
    veldkamp(&mut report, &cat);
    pauli(&mut report, &cat);
    symmetry(&mut report, &cat);
    report
}

fn models(report: &mut VerificationReport, cat: &Catalog) {
    let q = cat.quadric.geometry();
    report.expect("Q(4,2) points", 15, q.num_points());
    report.expect("Q(4,2) lines", 15, q.num_lines());
    report.expect("Q(4,2) GQ order", gq_22(), order_text(&verify_gq(q)));
    report.expect(
        "symplectic and quadric models isomorphic",
        true,
        cat.model_map.is_isomorphism(cat.w2.geometry(), q),
    );
    let self_dual = dual(cat.w2.geometry())
        .ok()
        .and_then(|d| find_isomorphism(cat.w2.geometry(), &d))
        .is_some();
    report.expect("W(2) self-dual", true, self_dual);
}

fn hyperplanes(report: &mut VerificationReport, cat: &Catalog) {
    let hs = cat.veldkamp.hyperplanes();
    let of_kind = |pred: &dyn Fn(HyperplaneKind) -> bool| {
        let sel: Vec<_> = hs.iter().filter(|h| pred(h.kind)).collect();
        let sizes: BTreeSet<usize> = sel.iter().map(|h| h.points.len()).collect();
        (
            sel.len(),
            sizes
                .into_iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("/"),
        )
    };
    report.expect("hyperplanes", 31, hs.len());
    let (n, sizes) = of_kind(&|k| k.center().is_some());
    report.expect(
        "perp-set hyperplanes (count, size)",
        "15 of size 7".to_string(),
        format!("{n} of size {sizes}"),
    );
    let (n, sizes) = of_kind(&|k| k == HyperplaneKind::Grid);
    report.expect(
        "grid hyperplanes (count, size)",
        "10 of size 9".to_string(),
        format!("{n} of size {sizes}"),
    );
    let (n, sizes) = of_kind(&|k| k == HyperplaneKind::Ovoid);
    report.expect(
        "ovoid hyperplanes (count, size)",
        "6 of size 5".to_string(),
        format!("{n} of size {sizes}"),
    );
    report.expect(
        "unclassified hyperplanes",
        0,
        of_kind(&|k| k == HyperplaneKind::Other).0,
    );
}

fn triads(report: &mut VerificationReport, cat: &Catalog) {
    let g = cat.w2.geometry();
    let count = |k: TriadKind| cat.triads.iter().filter(|t| t.kind == k).count();
    report.expect("triads", 80, cat.triads.len());
    report.expect("unicentric triads", 60, count(TriadKind::Unicentric));
    report.expect("tricentric triads", 20, count(TriadKind::Tricentric));
    report.expect("acentric triads", 0, count(TriadKind::Acentric));
    report.expect(
        "other centric triads",
        0,
        cat.triads.len()
            - count(TriadKind::Unicentric)
            - count(TriadKind::Tricentric)
            - count(TriadKind::Acentric),
    );

    let ovoids: Vec<PointSet> = cat
        .veldkamp
        .hyperplanes()
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Ovoid)
        .map(|h| h.points)
        .collect();
    let in_ovoid = |t: PointSet| ovoids.iter().any(|o| t.is_subset(*o));
    let uni_in = cat
        .triads
        .iter()
        .filter(|t| t.kind == TriadKind::Unicentric && in_ovoid(t.points()))
        .count();
    let tri_in = cat
        .triads
        .iter()
        .filter(|t| t.kind == TriadKind::Tricentric && in_ovoid(t.points()))
        .count();
    report.expect("unicentric triads inside an ovoid", 60, uni_in);
    report.expect("tricentric triads inside an ovoid", 0, tri_in);

    let grids_ok = cat
        .veldkamp
        .hyperplanes()
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Grid)
        .filter(|h| grid_complement_is_k33(g, h.points, &cat.triads))
        .count();
    report.expect(
        "grid complements split into perp tricentric triads forming K(3,3)",
        10,
        grids_ok,
    );

    let stars_ok = (0..g.num_points())
        .filter(|&x| unicentric_star(g, x, &cat.triads))
        .count();
    report.expect(
        "points whose 4 unicentric triads meet pairwise once and cover the perp",
        15,
        stars_ok,
    );
}

/// The complement of `grid` is `T ∪ T⊥` for a tricentric triad `T`, and the
/// collinearity graph on it is K(3,3) with parts `T`, `T⊥`.
pub(crate) fn grid_complement_is_k33(
    g: &PointLineGeometry,
    grid: PointSet,
    triads: &[crate::geometry::TriadReport],
) -> bool {
    let rest = g.all_points() & !grid;
    let Some(t) = triads
        .iter()
        .find(|t| t.kind == TriadKind::Tricentric && t.points().is_subset(rest))
    else {
        return false;
    };
    let a = t.points();
    let b = rest & !a;
    let Ok(pa) = perp(g, a) else { return false };
    let Ok(pb) = perp(g, b) else { return false };
    let b_tricentric = triads
        .iter()
        .any(|t| t.points() == b && t.kind == TriadKind::Tricentric);
    let k33 = a.iter().all(|x| b.iter().all(|y| g.collinear(x, y)))
        && a.iter().all(|x| a.iter().all(|y| !g.collinear(x, y)))
        && b.iter().all(|x| b.iter().all(|y| !g.collinear(x, y)));
    pa == b && pb == a && b_tricentric && k33
}

pub(crate) fn unicentric_star(
    g: &PointLineGeometry,
    x: usize,
    triads: &[crate::geometry::TriadReport],
) -> bool {
    let star: Vec<PointSet> = triads
        .iter()
        .filter(|t| t.kind == TriadKind::Unicentric && t.centers == PointSet::singleton(x))
        .map(|t| t.points())
        .collect();
    let pairwise = star
        .iter()
        .enumerate()
        .all(|(i, a)| star[i + 1..].iter().all(|b| (*a & *b).len() == 1));
    let union = star.iter().fold(PointSet::EMPTY, |acc, t| acc | *t);
    star.len() == 4
        && pairwise
        && !union.contains(x)
        && (union | PointSet::singleton(x)) == g.point_perp(x)
}

fn veldkamp(report: &mut VerificationReport, cat: &Catalog) {
    let v = &cat.veldkamp;
    let g = cat.w2.geometry();
    let all = g.all_points();
    report.expect("Veldkamp points", 31, v.hyperplanes().len());
    report.expect("Veldkamp lines", 155, v.lines().len());
    let well_formed = v
        .lines()
        .iter()
        .filter(|l| {
            let [a, b, c] = l.key();
            let odd = l.core.len() % 2 == 1 && l.core.len() <= 5;
            (a | b | c) == all && (a & b) == l.core && (a & c) == l.core && (b & c) == l.core && odd
        })
        .count();
    report.expect(
        "Veldkamp lines with 3 members, full union, odd core <= 5",
        155,
        well_formed,
    );
    let with_perp = v
        .lines()
        .iter()
        .filter(|l| l.composition().perps >= 1)
        .count();
    report.expect("Veldkamp lines containing a perp-set", 155, with_perp);

    let table = [
        (LineType::SinglePoint, Composition::new(1, 0, 2), 15),
        (LineType::CollinearTriple, Composition::new(3, 0, 0), 15),
        (LineType::UnicentricTriad, Composition::new(1, 1, 1), 60),
        (LineType::TricentricTriad, Composition::new(3, 0, 0), 20),
        (LineType::Pentad, Composition::new(1, 2, 0), 45),
    ];
    let fmt_row = |c: Composition, uniform: bool, n: usize| {
        let mark = if uniform { "" } else { " (mixed)" };
        format!("({}, {}, {}){mark} x {n}", c.perps, c.grids, c.ovoids)
    };
    for (t, comp, n) in table {
        let row = v.census().row(t);
        report.expect(
            &format!("Table 1 {t} (perps, grids, ovoids) x lines"),
            fmt_row(comp, true, n),
            fmt_row(row.composition, row.uniform, row.count),
        );
    }
    report.expect("Table 1 line total", 155, v.census().total_lines());

    let pentads: BTreeSet<PointSet> = v
        .lines()
        .iter()
        .filter(|l| l.line_type == LineType::Pentad)
        .map(|l| l.core)
        .collect();
    report.expect("distinct pentads", 45, pentads.len());
    let per_point_ok = (0..g.num_points())
        .filter(|&x| {
            pentads
                .iter()
                .filter(|p| {
                    g.lines_through(x)
                        .iter()
                        .filter(|&&l| g.line(l).is_subset(**p))
                        .count()
                        == 2
                })
                .count()
                == 3
        })
        .count();
    report.expect("points centring exactly 3 pentads", 15, per_point_ok);

    report.expect(
        "PG(4,2) functionals matched bijectively",
        31,
        cat.pg42.functionals.len(),
    );
    report.expect(
        "Veldkamp lines mapping to zero-sum functional triples",
        155,
        cat.pg42.zero_sum_lines,
    );
    report.expect(
        "zero-sum functional triples that are Veldkamp lines",
        155,
        cat.pg42.triples_matched,
    );
    let rule = check_third_member_rule(&cat.w2, v).map_err(|e| e.to_string());
    report.expect(
        "hyperplane pairs where P \\ (H1 Δ H2) matches the definitional third member",
        "465".to_string(),
        match rule {
            Ok(n) => n.to_string(),
            Err(e) => e,
        },
    );
}

fn pauli(report: &mut VerificationReport, cat: &Catalog) {
    let g = cat.w2.geometry();
    let bij = &cat.bijection;
    let mut agree = 0;
    for x in 0..g.num_points() {
        for y in x + 1..g.num_points() {
            let c = commutes(bij.operator(x), bij.operator(y));
            let s = !crate::gf2::symplectic_form(bij.operator(x).label, bij.operator(y).label)
                .unwrap_or(true);
            if c == s && c == g.collinear(x, y) {
                agree += 1;
            }
        }
    }
    report.expect(
        "operator pairs where commuting = isotropic = collinear",
        105,
        agree,
    );
    let good_lines = g
        .lines()
        .iter()
        .filter(|l| {
            let ops: Vec<_> = l.iter().map(|x| bij.operator(x)).collect();
            let pairwise = ops.iter().all(|p| ops.iter().all(|q| commutes(p, q)));
            pairwise && product(ops.iter().copied()).identity_sign().is_some()
        })
        .count();
    report.expect(
        "W(2) lines that are commuting triples with product ±I",
        15,
        good_lines,
    );

    let mut tags = [0usize; 3];
    let mut failures = 0;
    for h in cat.veldkamp.hyperplanes() {
        match interpret_hyperplane(h, bij) {
            Ok(Table2Tag::MutuallyNonCommuting) => tags[0] += 1,
            Ok(Table2Tag::CommutingWithReference { .. }) => tags[1] += 1,
            Ok(Table2Tag::MerminSquareSet) => tags[2] += 1,
            Err(_) => failures += 1,
        }
    }
    report.expect(
        "Table 2 interpretations (non-commuting 5-sets, commuting 6-sets, Mermin sets, failures)",
        "6, 15, 10, 0".to_string(),
        format!("{}, {}, {}, {failures}", tags[0], tags[1], tags[2]),
    );

    let squares: Vec<i8> = cat
        .veldkamp
        .hyperplanes()
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Grid)
        .filter_map(|h| mermin_square(h, bij).ok())
        .map(|sq| sq.sign_product())
        .collect();
    report.expect("Mermin squares arranged", 10, squares.len());
    report.expect(
        "Mermin squares with six-sign product -1",
        10,
        squares.iter().filter(|&&s| s == -1).count(),
    );
}

fn symmetry(report: &mut VerificationReport, cat: &Catalog) {
    let count = automorphism_count(cat.w2.geometry()).map_err(|e| e.to_string());
    report.expect(
        "W(2) automorphism group order",
        "720".to_string(),
        match count {
            Ok(n) => n.to_string(),
            Err(e) => e,
        },
    );
    let pg22 = ProjectiveSpace::new(2).and_then(|s| s.geometry());
    let fano_ok = match pg22 {
        Ok(pg22) => (0..cat.w2.geometry().num_points())
            .filter(|&x| {
                fano_plane_at(&cat.w2, x)
                    .map(|p| find_isomorphism(&p, &pg22).is_some())
                    .unwrap_or(false)
            })
            .count(),
        Err(_) => 0,
    };
    report.expect("points whose double-perp plane is PG(2,2)", 15, fano_ok);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run_passes() {
        let r = run_verification(&VerifyOptions::default());
        assert!(r.overall, "{}", r.render_text());
        assert!(r.render_text().contains("Veldkamp lines: expected 155"));
        assert_eq!(r.passed(), r.checks.len());
    }

    #[test]
    fn dropped_line_fails_at_transversal_axiom() {
        let r = run_verification(&VerifyOptions { drop_line: Some(4) });
        assert!(!r.overall);
        let first = r.first_failure().unwrap();
        assert_eq!(first.name, "W(2) symplectic GQ order");
        assert!(first.actual.starts_with("axiom (iii)"), "{}", first.actual);
    }

    #[test]
    fn bad_fault_index_is_reported() {
        let r = run_verification(&VerifyOptions {
            drop_line: Some(99),
        });
        assert!(!r.overall);
        assert_eq!(r.checks.len(), 1);
    }
}
