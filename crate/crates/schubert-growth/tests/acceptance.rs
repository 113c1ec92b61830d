//! Acceptance criteria 1–9. Each criterion prints one PASS/FAIL line with
//! its runtime and budget; the target exits nonzero if any line is FAIL.

mod common;

use std::time::{Duration, Instant};

use num_traits::Zero;
use schubert_growth::conic_monodromy::{
    consistency_with_growth, flag6_example, four_point_solve, rat, ratio, six_point_cycle, FourPoint, Poly, Rational,
};
use schubert_growth::cylgrowth::{
    cgd_enumerate, cgd_from_path, cgd_of_matching, matching_of_cgd, promotion, CylGrowthDiagram, PathThroughI,
};
use schubert_growth::decgd::decgd_enumerate;
use schubert_growth::figures;
use schubert_growth::moduli_cover::{build_cover_graph, cross_cgd, fiber_count, LabeledTree, Wall};
use schubert_growth::tableaux::{dual_classes, rectify, shuffle, ChainTableau};
use schubert_growth::{BoxFrame, Partition};

/// Exact arithmetic throughout except the Fl(6) roots.
const ROOT_TOLERANCE: f64 = 1e-4;
const FL6_ROOTS: [f64; 4] = [0.678121, 0.945553, 1.41011, 1.96622];

type Outcome = Result<String, String>;
type Property = fn() -> Result<usize, String>;
type Criterion = (u8, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn frame(d: usize, n: usize) -> BoxFrame {
    BoxFrame::new(d, n).unwrap()
}

fn part(f: BoxFrame, p: &[usize]) -> Partition {
    f.partition(p).unwrap()
}

fn dense(p: &Partition) -> Vec<usize> {
    (0..p.frame().d).map(|k| p.row(k)).collect()
}

fn criterion_1() -> Outcome {
    let g = cgd_from_path(&figures::figure_path(), &figures::figure_chain()).map_err(|e| e.to_string())?;
    let want = figures::growth_example();
    let r = want.r() as i64;
    let mut entries = 0;
    for i in 0..r {
        for j in i..=i + r {
            ensure(g.get(i, j) == want.get(i, j), || format!("γ_{i},{j}: {} vs {}", g.get(i, j), want.get(i, j)))?;
            entries += 1;
        }
    }
    ensure(g == want, || "diagrams differ".into())?;
    Ok(format!("{entries} entries of the (2,5) diagram reproduced"))
}

fn criterion_2() -> Outcome {
    let top = figures::growth_example();
    let (p, q) = figures::FIGURE_WALL;
    let w = Wall::new(top.r(), p, q).map_err(|e| e.to_string())?;
    ensure(w.reversed_len(top.r()) == 3, || "figure wall should reverse three positions".into())?;
    let bottom = cross_cgd(&top, w).map_err(|e| e.to_string())?;
    ensure(bottom == figures::wall_crossed_example(), || "bottom diagram differs".into())?;
    ensure(cross_cgd(&bottom, w).map_err(|e| e.to_string())? == top, || "second crossing differs from top".into())?;
    Ok(format!("wall ({p},{q}) maps top to bottom and back"))
}

fn criterion_3() -> Outcome {
    let mut out = Vec::new();
    for (d, n, published) in [(2, 4, 2u128), (2, 5, 5), (3, 6, 42)] {
        let got = cgd_enumerate(frame(d, n)).len() as u128;
        let hook = common::hook_length_rectangle(d, n - d);
        ensure(got == hook && hook == published, || format!("({d},{n}): {got} diagrams, hook {hook}"))?;
        out.push(format!("#CGD({d},{n})={got}"));
    }
    Ok(out.join(" "))
}

fn shapes_with_r(f: BoxFrame, r: usize) -> Vec<Vec<Partition>> {
    let nonempty: Vec<Partition> = f.partitions().into_iter().filter(|p| !p.is_empty()).collect();
    let mut out: Vec<Vec<Partition>> = vec![vec![]];
    for _ in 0..r {
        let mut next = Vec::new();
        for s in &out {
            let used: usize = s.iter().map(Partition::size).sum();
            for p in &nonempty {
                if used + p.size() <= f.area() {
                    let mut t = s.clone();
                    t.push(p.clone());
                    next.push(t);
                }
            }
        }
        out = next;
    }
    out.retain(|s| s.iter().map(Partition::size).sum::<usize>() == f.area());
    out
}

fn criterion_4() -> Outcome {
    let f24 = frame(2, 4);
    let mut cases: Vec<(BoxFrame, Vec<Partition>)> = Vec::new();
    for r in [3, 4] {
        cases.extend(shapes_with_r(f24, r).into_iter().map(|s| (f24, s)));
    }
    let f25 = frame(2, 5);
    let sampled: [&[&[usize]]; 5] = [
        &[&[2, 1], &[2], &[1]],
        &[&[3], &[2], &[1]],
        &[&[2], &[1, 1], &[1], &[1]],
        &[&[2, 2], &[1], &[1]],
        &[&[1, 1], &[1, 1], &[1], &[1]],
    ];
    for s in sampled {
        cases.push((f25, s.iter().map(|p| part(f25, p)).collect()));
    }
    let mut nonzero = 0;
    for (f, shape) in &cases {
        let got = decgd_enumerate(*f, shape).map_err(|e| e.to_string())?.len() as u64;
        let want = common::lr_rectangle(f.d, f.cols(), &shape.iter().map(dense).collect::<Vec<_>>());
        ensure(got == want, || format!("{shape:?}: {got} decgds vs LR {want}"))?;
        nonzero += usize::from(want > 0);
    }
    Ok(format!("{} shapes ({nonzero} with nonzero coefficient)", cases.len()))
}

fn criterion_5() -> Outcome {
    let f = frame(2, 4);
    let FourPoint::Conic(rep) = four_point_solve(f, &f.single_box(), &f.single_box()).map_err(|e| e.to_string())?
    else {
        return Err("(□,□) in (2,4) is not a conic".into());
    };
    ensure(rep.coefficients == [1, 2, 2, 3], || format!("coefficients {:?}", rep.coefficients))?;
    let published = |tau: &Rational, u: &Rational| u * u - rat(2) * u - rat(2) * tau * u + rat(3) * tau;
    for tau in [rat(0), rat(1), ratio(-3, 7), ratio(5, 2)] {
        for u in [rat(0), rat(2), ratio(1, 3), ratio(-9, 4)] {
            let got = rep.conic_at(&tau, &u);
            ensure(got == published(&tau, &u), || format!("conic differs at τ={tau}, u={u}"))?;
        }
    }
    // (2 + 2τ)² − 4·3τ
    let b = Poly::from_ints(&[2, 2]);
    let disc = b.mul(&b).sub(&Poly::from_ints(&[0, 12]));
    ensure(disc == Poly::from_ints(&[4, -4, 4]), || "oracle discriminant".into())?;
    for u in [ratio(1, 2), rat(5), ratio(-7, 3)] {
        let tau = rep.tau_of_u(&u).ok_or("no τ for a finite u")?;
        ensure(rep.conic_at(&tau, &u).is_zero(), || format!("τ(u) off the conic at u={u}"))?;
    }
    ensure(rep.discriminant_in_u() == disc, || format!("discriminant {}", rep.discriminant_in_u().display("τ")))?;
    Ok("u² − 2u − 2τu + 3τ = 0, discriminant 4(τ² − τ + 1), exact".into())
}

fn criterion_6() -> Outcome {
    let mut conics = 0;
    for n in 4..=6 {
        let f = frame(2, n);
        let (one_one, two) = (part(f, &[1, 1]), part(f, &[2]));
        for lambda in f.partitions() {
            for mu in f.partitions() {
                if lambda.size() + mu.size() + 2 != f.area() {
                    continue;
                }
                let FourPoint::Conic(rep) = four_point_solve(f, &lambda, &mu).map_err(|e| e.to_string())? else {
                    continue;
                };
                let top = mu.complement();
                let (k1, k2) = (&rep.kappa1, &rep.kappa2);
                ensure(
                    k1 != k2
                        && [k1, k2]
                            .iter()
                            .all(|k| k.contains(&lambda) && top.contains(k) && k.size() == lambda.size() + 1),
                    || format!("κ's of ({lambda},{mu}) are not the two intermediates"),
                )?;
                let cycle = six_point_cycle(f, &lambda, &mu).map_err(|e| e.to_string())?;
                let want = [k1.clone(), k2.clone(), one_one.clone(), k2.clone(), k1.clone(), two.clone()];
                ensure(cycle == want, || format!("({lambda},{mu}) in (2,{n}): {cycle:?}"))?;
                conics += 1;
            }
        }
    }
    for n in [4, 5] {
        ensure(consistency_with_growth(frame(2, n)).map_err(|e| e.to_string())?, || format!("(2,{n}) inconsistent"))?;
    }
    Ok(format!("{conics} conics give κ₁,κ₂,(1,1),κ₂,κ₁,(2); growth consistent on (2,4),(2,5)"))
}

fn criterion_7() -> Outcome {
    let rep = flag6_example();
    let quartic = [256, -960, 1281, -720, 144];
    ensure(rep.discriminant == Poly::from_ints(&quartic), || format!("quartic {}", rep.discriminant.display("τ")))?;
    let f = |x: f64| quartic.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64);
    ensure(rep.real_roots.len() == 4, || format!("{} real roots", rep.real_roots.len()))?;
    let mut worst: f64 = 0.0;
    for (x, w) in rep.real_roots.iter().zip(FL6_ROOTS) {
        worst = worst.max((x - w).abs());
        ensure((x - w).abs() < ROOT_TOLERANCE, || format!("root {x} vs {w}"))?;
        ensure(f(w - ROOT_TOLERANCE) * f(w + ROOT_TOLERANCE) < 0.0, || format!("no sign change near {w}"))?;
    }
    Ok(format!("quartic exact, max root deviation {worst:.1e} (tolerance {ROOT_TOLERANCE:.0e})"))
}

fn criterion_8() -> Outcome {
    let f = frame(2, 4);
    let g = build_cover_graph(f, &vec![f.single_box(); 4]).map_err(|e| e.to_string())?;
    let facets = g.fiber_sizes();
    ensure(g.nodes.len() == 6 && g.edges.len() == 6, || format!("{} nodes, {} edges", g.nodes.len(), g.edges.len()))?;
    ensure(facets.len() == 3 && facets.values().all(|&k| k == 2), || format!("fibers {facets:?}"))?;
    let neighbours = |v: usize| -> Vec<usize> {
        g.edges
            .iter()
            .filter_map(|e| {
                if e.from == v {
                    Some(e.to)
                } else if e.to == v {
                    Some(e.from)
                } else {
                    None
                }
            })
            .collect()
    };
    let (mut prev, mut cur, mut steps) = (0, neighbours(0)[0], 1);
    while cur != 0 {
        let nb = neighbours(cur);
        ensure(nb.len() == 2, || format!("node {cur} has degree {}", nb.len()))?;
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        (prev, cur, steps) = (cur, next, steps + 1);
        ensure(steps <= 6, || "walk does not close".into())?;
    }
    ensure(steps == 6, || format!("cycle of length {steps}"))?;
    Ok("one 6-cycle over 3 facets".into())
}

fn small_diagrams() -> Vec<CylGrowthDiagram> {
    [frame(2, 4), frame(2, 5), frame(3, 6)].into_iter().flat_map(cgd_enumerate).collect()
}

fn shuffle_involution() -> Result<usize, String> {
    let f = frame(2, 5);
    let mut n = 0;
    for a in f.partitions() {
        for b in f.partitions().into_iter().filter(|b| b.contains(&a) && b.size() <= a.size() + 3) {
            for c in f.partitions().into_iter().filter(|c| c.contains(&b) && c.size() <= b.size() + 3) {
                for x in ChainTableau::all(&b, &a) {
                    for y in ChainTableau::all(&c, &b) {
                        let (s, t) = shuffle(&x, &y).map_err(|e| e.to_string())?;
                        ensure(s.len() == y.len() && t.len() == x.len(), || "lengths not swapped".into())?;
                        ensure(shuffle(&s, &t).map_err(|e| e.to_string())? == (x.clone(), y), || {
                            "not an involution".into()
                        })?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

fn rectification_paths() -> Result<usize, String> {
    let f = frame(3, 6);
    let mut n = 0;
    for inner in f.partitions().into_iter().filter(|p| p.size() <= 4) {
        let orders = ChainTableau::all(&inner, &f.empty());
        for outer in f.partitions().into_iter().filter(|o| o.contains(&inner) && o.size() <= inner.size() + 3) {
            for t in ChainTableau::all(&outer, &inner) {
                let want = rectify(&t);
                for alpha in &orders {
                    ensure(shuffle(alpha, &t).map_err(|e| e.to_string())?.0 == want, || "depends on order".into())?;
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

fn dual_class_counts() -> Result<usize, String> {
    let f = frame(2, 4);
    let mut n = 0;
    for nu in f.partitions() {
        for mu in f.partitions().into_iter().filter(|m| nu.contains(m)) {
            for lambda in f.partitions_of_size(nu.size() - mu.size()) {
                let got = dual_classes(&nu, &mu, &lambda).len() as u64;
                let want = common::lr_tableaux(&dense(&nu), &dense(&mu), &dense(&lambda));
                ensure(got == want, || format!("c^{nu}_{{{mu},{lambda}}}: {got} vs {want}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn glide_reflect() -> Result<usize, String> {
    let ds = small_diagrams();
    for g in &ds {
        let r = g.r() as i64;
        for i in -r..2 * r {
            for j in i..=i + r {
                ensure(g.get(i, j) == &g.get(j, i + r).complement(), || format!("({i},{j})"))?;
                ensure(g.get(i, j) == g.get(i + r, j + r), || format!("({i},{j}) not periodic"))?;
            }
        }
    }
    Ok(ds.len())
}

fn domino_lemma() -> Result<usize, String> {
    let mut n = 0;
    for g in small_diagrams() {
        let f = g.frame();
        let r = g.r() as i64;
        for i in 0..r {
            for j in i..=i + r - 2 {
                let (a, b, c) = (dense(g.get(i, j)), dense(g.get(i, j + 1)), dense(g.get(i, j + 2)));
                let row = |x: &[usize], y: &[usize]| (0..f.d).find(|&k| x[k] != y[k]).unwrap();
                let (first, second) = (row(&a, &b), row(&b, &c));
                let want: &[usize] = if second <= first { &[2] } else { &[1, 1] };
                ensure(g.get(j, j + 2).parts() == want, || format!("({i},{j}) in {f:?}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn promotion_order() -> Result<usize, String> {
    let mut n = 0;
    for f in [frame(2, 4), frame(2, 5), frame(3, 6), frame(2, 6)] {
        for t in ChainTableau::all(&f.rectangle(), &f.empty()) {
            let mut x = t.clone();
            for _ in 0..f.area() {
                x = promotion(&x).map_err(|e| e.to_string())?;
            }
            ensure(x == t, || format!("{f:?}"))?;
            n += 1;
        }
    }
    Ok(n)
}

fn matchings() -> Result<usize, String> {
    let mut n = 0;
    for f in [frame(2, 4), frame(2, 5)] {
        let row0 = PathThroughI::row(0, f.area());
        for g in cgd_enumerate(f) {
            let m = matching_of_cgd(&g).map_err(|e| e.to_string())?;
            ensure(cgd_of_matching(&m).map_err(|e| e.to_string())? == g, || "round trip".into())?;
            let shifted = cgd_from_path(&row0, &promotion(&g.row_tableau(0)).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            ensure(matching_of_cgd(&shifted).map_err(|e| e.to_string())? == m.rotate(-1), || "rotation".into())?;
            n += 1;
        }
    }
    Ok(n)
}

fn fiber_counts() -> Result<usize, String> {
    let mut n = 0;
    for (f, r) in [(frame(2, 4), 4), (frame(2, 5), 4), (frame(2, 5), 5)] {
        let trees = LabeledTree::all(r);
        for shape in shapes_with_r(f, r) {
            let want = common::lr_rectangle(f.d, f.cols(), &shape.iter().map(dense).collect::<Vec<_>>());
            for t in &trees {
                let got = fiber_count(f, t, &shape).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{shape:?} on {:?}: {got} vs {want}", t.splits()))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

fn criterion_9() -> Outcome {
    let suites: [(&str, Property); 8] = [
        ("shuffle involution", shuffle_involution),
        ("rectification", rectification_paths),
        ("dual classes", dual_class_counts),
        ("glide reflect", glide_reflect),
        ("domino", domino_lemma),
        ("promotion^r", promotion_order),
        ("matchings", matchings),
        ("fiber counts", fiber_counts),
    ];
    let mut out = Vec::new();
    for (name, run) in suites {
        out.push(format!("{name} {}", run().map_err(|e| format!("{name}: {e}"))?));
    }
    Ok(out.join(", "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, criterion_1, 1),
        (2, criterion_2, 1),
        (3, criterion_3, 10),
        (4, criterion_4, 30),
        (5, criterion_5, 1),
        (6, criterion_6, 60),
        (7, criterion_7, 1),
        (8, criterion_8, 1),
        (9, criterion_9, 300),
    ];
    let mut failed = Vec::new();
    for (id, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= Duration::from_secs(budget) => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(e) => (false, e),
        };
        println!(
            "{} criterion {id}: {detail} [{:.3}s of {budget}s]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        if !ok {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
