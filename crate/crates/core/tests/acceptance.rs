//! Acceptance criteria, one pass/fail line each. Counts are checked against
//! brute-force recomputations where a cheap independent route exists.

use std::collections::{HashMap, HashSet};
use std::process::Command;

use doily::gf2::ProjectiveSpace;
use doily::veldkamp::{third_member, Composition};
use doily::{
    automorphism_count, build_bijection, build_q42, build_veldkamp_space, build_w2_symplectic,
    commutes, enumerate_hyperplanes, enumerate_triads, fano_plane_at, find_isomorphism,
    mermin_square, verify_gq, verify_pg42_isomorphism, GqOrder, HyperplaneKind, LineType,
    PointLineGeometry, PointSet, TriadKind,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Result<(), String> {
    ensure(expected == actual, || {
        format!("{what}: expected {expected:?}, got {actual:?}")
    })
}

/// Every proper subset met by each line in one or all of its points.
fn brute_force_hyperplanes(g: &PointLineGeometry) -> Vec<PointSet> {
    let n = g.num_points();
    (0u64..(1 << n) - 1)
        .map(PointSet::from_mask)
        .filter(|&s| {
            g.lines()
                .iter()
                .all(|&l| matches!((l & s).len(), 1) || l.is_subset(s))
        })
        .collect()
}

fn common_neighbours(g: &PointLineGeometry, pts: &[usize]) -> usize {
    (0..g.num_points())
        .filter(|&z| pts.iter().all(|&p| z == p || g.collinear(z, p)))
        .count()
}

fn w2_construction() -> Outcome {
    let s = build_w2_symplectic();
    let q = build_q42();
    for (name, w) in [("symplectic", &s), ("quadric", &q)] {
        let g = w.geometry();
        eq(&format!("{name} points"), 15, g.num_points())?;
        eq(&format!("{name} lines"), 15, g.num_lines())?;
        eq(
            &format!("{name} order"),
            Ok(GqOrder { s: 2, t: 2 }),
            verify_gq(g).map_err(|v| v.to_string()),
        )?;
    }
    let iso = find_isomorphism(s.geometry(), q.geometry()).ok_or("models not isomorphic")?;
    ensure(iso.is_isomorphism(s.geometry(), q.geometry()), || {
        "returned map is not an isomorphism".into()
    })?;
    Ok("15 points, 15 lines, GQ(2,2), models isomorphic".into())
}

fn hyperplane_census() -> Outcome {
    let g = build_w2_symplectic().geometry().clone();
    let found = enumerate_hyperplanes(&g).map_err(|e| e.to_string())?;
    let oracle = brute_force_hyperplanes(&g);
    let mut listed: Vec<PointSet> = found.iter().map(|h| h.points).collect();
    listed.sort();
    eq("hyperplane sets vs brute force", oracle, listed)?;
    let mut by_kind: HashMap<&str, (usize, HashSet<usize>)> = HashMap::new();
    for h in &found {
        let e = by_kind.entry(h.kind.name()).or_default();
        e.0 += 1;
        e.1.insert(h.points.len());
    }
    eq("total", 31, found.len())?;
    for (kind, count, size) in [("perp", 15, 7), ("grid", 10, 9), ("ovoid", 6, 5)] {
        let (c, sizes) = by_kind.remove(kind).unwrap_or_default();
        eq(&format!("{kind} count"), count, c)?;
        eq(&format!("{kind} sizes"), HashSet::from([size]), sizes)?;
    }
    ensure(by_kind.is_empty(), || {
        format!("unexpected kinds {by_kind:?}")
    })?;
    Ok("31 = 15 perps (7) + 10 grids (9) + 6 ovoids (5)".into())
}

fn triad_census() -> Outcome {
    let g = build_w2_symplectic().geometry().clone();
    let triads = enumerate_triads(&g);
    let mut oracle = (0, 0, 0, 0);
    for a in 0..15 {
        for b in a + 1..15 {
            for c in b + 1..15 {
                if g.collinear(a, b) || g.collinear(a, c) || g.collinear(b, c) {
                    continue;
                }
                oracle.0 += 1;
                match common_neighbours(&g, &[a, b, c]) {
                    1 => oracle.1 += 1,
                    3 => oracle.2 += 1,
                    _ => oracle.3 += 1,
                }
            }
        }
    }
    eq("brute-force census", (80, 60, 20, 0), oracle)?;
    let count = |k: TriadKind| triads.iter().filter(|t| t.kind == k).count();
    let listed = (
        triads.len(),
        count(TriadKind::Unicentric),
        count(TriadKind::Tricentric),
        triads.len() - count(TriadKind::Unicentric) - count(TriadKind::Tricentric),
    );
    eq("library census", oracle, listed)?;
    Ok("80 triads: 60 unicentric, 20 tricentric, 0 other".into())
}

fn triad_structure() -> Outcome {
    let g = build_w2_symplectic().geometry().clone();
    let hyperplanes = enumerate_hyperplanes(&g).map_err(|e| e.to_string())?;
    let ovoids: Vec<PointSet> = hyperplanes
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Ovoid)
        .map(|h| h.points)
        .collect();
    for t in enumerate_triads(&g) {
        let in_ovoid = ovoids.iter().any(|o| t.points().is_subset(*o));
        match t.kind {
            TriadKind::Unicentric => ensure(in_ovoid, || format!("{} in no ovoid", t.points()))?,
            TriadKind::Tricentric => ensure(!in_ovoid, || format!("{} in an ovoid", t.points()))?,
            k => return Err(format!("unexpected triad kind {k:?}")),
        }
    }
    let mut grids = 0;
    for h in hyperplanes
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Grid)
    {
        grids += 1;
        let comp = g.all_points() & !h.points;
        eq("complement size", 6, comp.len())?;
        let pts = comp.to_vec();
        let a = pts[0];
        let side_a: Vec<usize> = pts
            .iter()
            .copied()
            .filter(|&y| !g.collinear(a, y) || y == a)
            .collect();
        let side_b: Vec<usize> = pts
            .iter()
            .copied()
            .filter(|y| !side_a.contains(y))
            .collect();
        eq("part sizes", (3, 3), (side_a.len(), side_b.len()))?;
        let edges = pts
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| pts[i + 1..].iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| g.collinear(x, y))
            .count();
        eq("complement edges", 9, edges)?;
        for &x in &side_a {
            for &y in &side_b {
                ensure(g.collinear(x, y), || format!("{x} and {y} not collinear"))?;
            }
        }
        for side in [&side_a, &side_b] {
            eq(
                "side is tricentric triad",
                3,
                common_neighbours(&g, side.as_slice()),
            )?;
            let centers = PointSet::from_indices(
                (0..15).filter(|&z| side.iter().all(|&p| g.collinear(z, p) && z != p)),
            );
            let other = if std::ptr::eq(side, &side_a) {
                &side_b
            } else {
                &side_a
            };
            eq(
                "centers are the other part",
                PointSet::from_indices(other.iter().copied()),
                centers,
            )?;
        }
    }
    eq("grids checked", 10, grids)?;
    Ok("unicentric in ovoids, tricentric not; 10 grid complements are K(3,3)".into())
}

fn veldkamp_space() -> Outcome {
    let w = build_w2_symplectic();
    let v = build_veldkamp_space(&w).map_err(|e| e.to_string())?;
    eq("points", 31, v.hyperplanes().len())?;
    eq("lines", 155, v.lines().len())?;
    let all = w.geometry().all_points();
    let mut pairs = HashSet::new();
    for line in v.lines() {
        let m = line.key();
        let distinct: HashSet<PointSet> = m.iter().copied().collect();
        eq("distinct members", 3, distinct.len())?;
        eq("union of members", all, m[0] | m[1] | m[2])?;
        let core = m[0] & m[1] & m[2];
        eq("core", core, line.core)?;
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            eq("pairwise meet", core, m[x] & m[y])?;
            ensure(pairs.insert((m[x], m[y])), || "pair on two lines".into())?;
        }
        ensure(core.len() % 2 == 1 && core.len() <= 5, || {
            format!("core size {}", core.len())
        })?;
    }
    eq("pairs covered", 465, pairs.len())?;
    Ok("31 points, 155 lines of 3, members cover P, odd cores of size <= 5".into())
}

fn table1() -> Outcome {
    let v = build_veldkamp_space(&build_w2_symplectic()).map_err(|e| e.to_string())?;
    let expected = [
        (LineType::SinglePoint, 15, Composition::new(1, 0, 2)),
        (LineType::CollinearTriple, 15, Composition::new(3, 0, 0)),
        (LineType::UnicentricTriad, 60, Composition::new(1, 1, 1)),
        (LineType::TricentricTriad, 20, Composition::new(3, 0, 0)),
        (LineType::Pentad, 45, Composition::new(1, 2, 0)),
    ];
    for (t, count, comp) in expected {
        let lines: Vec<_> = v.lines().iter().filter(|l| l.line_type == t).collect();
        eq(&format!("{t} count"), count, lines.len())?;
        for l in lines {
            eq(&format!("{t} composition"), comp, l.composition())?;
            eq(
                &format!("{t} core size"),
                l.core.len(),
                match t {
                    LineType::SinglePoint => 1,
                    LineType::Pentad => 5,
                    _ => 3,
                },
            )?;
        }
        let row = v.census().row(t);
        eq(
            &format!("{t} census row"),
            (count, comp, true),
            (row.count, row.composition, row.uniform),
        )?;
    }
    Ok("counts (15,15,60,20,45), compositions match".into())
}

fn pg42() -> Outcome {
    let s = build_w2_symplectic();
    let q = build_q42();
    let iso = find_isomorphism(s.geometry(), q.geometry()).ok_or("models not isomorphic")?;
    let coords = s.with_labels_from(&q, &iso).map_err(|e| e.to_string())?;
    let v = build_veldkamp_space(&s).map_err(|e| e.to_string())?;
    let report = verify_pg42_isomorphism(&v, &coords).map_err(|e| e.to_string())?;
    let masks: HashSet<u32> = report.functionals.iter().map(|f| f.mask()).collect();
    eq(
        "distinct functionals",
        (1..32).collect::<HashSet<u32>>(),
        masks,
    )?;
    for (h, f) in v.hyperplanes().iter().zip(&report.functionals) {
        let zero_set = PointSet::from_indices(
            (0..15).filter(|&x| (f.mask() & coords.label(x).mask()).count_ones() % 2 == 0),
        );
        eq("functional zero set", h.points, zero_set)?;
    }
    for line in v.lines() {
        let [a, b, c] = v.member_indices(line).map(|i| report.functionals[i].mask());
        eq("zero-sum triple", 0, a ^ b ^ c)?;
    }
    eq("report zero-sum lines", 155, report.zero_sum_lines)?;

    let hs: Vec<PointSet> = v.hyperplanes().iter().map(|h| h.points).collect();
    let mut agreed = 0;
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            let core = hs[i] & hs[j];
            let scanned: Vec<PointSet> = hs
                .iter()
                .copied()
                .filter(|&h| h != hs[i] && h != hs[j] && (h & hs[i]) == core && (h & hs[j]) == core)
                .collect();
            eq("scan finds one third", 1, scanned.len())?;
            eq(
                "third member rule",
                scanned[0],
                third_member(s.geometry().all_points(), hs[i], hs[j]),
            )?;
            agreed += 1;
        }
    }
    eq("pairs agreeing", 465, agreed)?;
    Ok("31 functionals, 155 zero-sum lines, third-member rule on 465 pairs".into())
}

fn pauli() -> Outcome {
    let w = build_w2_symplectic();
    let bij = build_bijection(&w).map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for x in 0..15 {
        for y in x + 1..15 {
            let (a, b) = (w.label(x).mask(), w.label(y).mask());
            let form = ((a & 1) & (b >> 1 & 1))
                ^ ((a >> 1 & 1) & (b & 1))
                ^ ((a >> 2 & 1) & (b >> 3 & 1))
                ^ ((a >> 3 & 1) & (b >> 2 & 1));
            eq(
                &format!("commutation of {x},{y}"),
                form == 0,
                commutes(bij.operator(x), bij.operator(y)),
            )?;
            pairs += 1;
        }
    }
    eq("pairs", 105, pairs)?;
    for line in w.geometry().lines() {
        let ops: Vec<_> = line.iter().map(|x| bij.operator(x)).collect();
        for (i, p) in ops.iter().enumerate() {
            for q in &ops[i + 1..] {
                ensure(commutes(p, q), || format!("line {line} not commuting"))?;
            }
        }
        let prod = ops[0].matrix * ops[1].matrix * ops[2].matrix;
        ensure(prod.identity_sign().is_some(), || {
            format!("line {line} product not ±I")
        })?;
    }
    Ok("105 pairs agree with the symplectic form; 15 lines give ±I".into())
}

fn mermin() -> Outcome {
    let w = build_w2_symplectic();
    let g = w.geometry();
    let bij = build_bijection(&w).map_err(|e| e.to_string())?;
    let hyperplanes = enumerate_hyperplanes(g).map_err(|e| e.to_string())?;
    let mut squares = 0;
    for h in hyperplanes
        .iter()
        .filter(|h| h.kind == HyperplaneKind::Grid)
    {
        let sq = mermin_square(h, &bij).map_err(|e| e.to_string())?;
        let cells: PointSet = PointSet::from_indices(sq.points.iter().flatten().copied());
        eq("cells cover grid", h.points, cells)?;
        let mut signs = 1i8;
        for i in 0..3 {
            for set in [sq.row(i), sq.column(i)] {
                ensure(g.contains_line(set), || format!("{set} is not a line"))?;
            }
            let row = sq.cells[i][0].matrix * sq.cells[i][1].matrix * sq.cells[i][2].matrix;
            let col = sq.cells[0][i].matrix * sq.cells[1][i].matrix * sq.cells[2][i].matrix;
            let rs = row.identity_sign().ok_or("row product not ±I")?;
            let cs = col.identity_sign().ok_or("column product not ±I")?;
            eq("row sign", sq.row_signs[i], rs)?;
            eq("column sign", sq.col_signs[i], cs)?;
            signs *= rs * cs;
        }
        eq("six-sign product", -1, signs)?;
        squares += 1;
    }
    eq("squares", 10, squares)?;
    Ok("10 grids give squares with sign product -1".into())
}

fn automorphisms() -> Outcome {
    let n = automorphism_count(build_w2_symplectic().geometry()).map_err(|e| e.to_string())?;
    eq("automorphism group order", 720, n)?;
    Ok("|Aut W(2)| = 720".into())
}

fn fano() -> Outcome {
    let w = build_w2_symplectic();
    let pg22 = ProjectiveSpace::new(2)
        .and_then(|s| s.geometry())
        .map_err(|e| e.to_string())?;
    for x in 0..15 {
        let plane = fano_plane_at(&w, x).map_err(|e| e.to_string())?;
        eq("plane points", 7, plane.num_points())?;
        eq("plane lines", 7, plane.num_lines())?;
        ensure(find_isomorphism(&plane, &pg22).is_some(), || {
            format!("plane at {x} is not PG(2,2)")
        })?;
    }
    Ok("15 double-perp planes are isomorphic to PG(2,2)".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_doily");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("model{i}.json"));
        let status = Command::new(bin)
            .args(["export", "--format", "json", "--output"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("export exited with {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(!outputs[0].is_empty(), || "export wrote nothing".into())?;
    ensure(outputs[0] == outputs[1], || "exports differ".into())?;
    let verify = Command::new(bin)
        .arg("verify")
        .output()
        .map_err(|e| e.to_string())?;
    eq("verify exit code", Some(0), verify.status.code())?;
    Ok(format!(
        "two exports byte-identical ({} bytes); verify exits 0",
        outputs[0].len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("W(2) construction", w2_construction),
        ("hyperplane census", hyperplane_census),
        ("triad census", triad_census),
        ("structural triad facts", triad_structure),
        ("Veldkamp space", veldkamp_space),
        ("Veldkamp line table", table1),
        ("PG(4,2) isomorphism", pg42),
        ("Pauli correspondence", pauli),
        ("Mermin obstruction", mermin),
        ("automorphism order", automorphisms),
        ("Fano planes", fano),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                println!("[FAIL] {:>2} {name}: {why}", i + 1);
                failed.push(*name);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed.len(),
        criteria.len()
    );
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
