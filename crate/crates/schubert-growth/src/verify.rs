//! Runtime self-checks behind `growth verify`: figure reproduction, counts,
//! the conic computations and the combinatorial property suites.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::conic_monodromy::{
    consistency_with_growth, flag6_example, four_point_solve, six_point_cycle, FourPoint, Poly,
};
use crate::cylgrowth::{
    cgd_enumerate, cgd_from_path, cgd_of_matching, is_valid, matching_of_cgd, promotion, CylGrowthDiagram, PathThroughI,
};
use crate::decgd::decgd_enumerate;
use crate::figures;
use crate::moduli_cover::{build_cover_graph, cross_cgd, fiber_count, LabeledTree, Wall};
use crate::partitions::{lr_coefficient, lr_two, BoxFrame, Partition};
use crate::tableaux::{dual_classes, rectify, shuffle, ChainTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Conic,
    Growth,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conic" => Ok(Suite::Conic),
            "growth" => Ok(Suite::Growth),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite `{s}` (expected conic, growth or all)")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} [{}] {}: {}", self.id, self.name, self.detail)
    }
}

type Outcome = Result<String, String>;
type Property = fn() -> Result<usize, String>;

struct Check {
    id: u8,
    name: &'static str,
    suite: Suite,
    run: fn() -> Outcome,
}

const CHECKS: [Check; 9] = [
    Check { id: 1, name: "growth figure", suite: Suite::Growth, run: growth_figure },
    Check { id: 2, name: "wall figure", suite: Suite::Growth, run: wall_figure },
    Check { id: 3, name: "cgd counts", suite: Suite::Growth, run: cgd_counts },
    Check { id: 4, name: "decgd counts", suite: Suite::Growth, run: decgd_counts },
    Check { id: 5, name: "g24 conic", suite: Suite::Conic, run: g24_conic },
    Check { id: 6, name: "six-point cycle", suite: Suite::Conic, run: six_point },
    Check { id: 7, name: "Fl(6) quartic", suite: Suite::Conic, run: flag6 },
    Check { id: 8, name: "cover at r = 4", suite: Suite::Growth, run: cover_r4 },
    Check { id: 9, name: "property suites", suite: Suite::Growth, run: properties },
];

pub fn run_checks(suite: Suite) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)();
            let elapsed = start.elapsed();
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { id: c.id, name: c.name, passed, detail, elapsed }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn frame(d: usize, n: usize) -> BoxFrame {
    BoxFrame::new(d, n).expect("fixed frame")
}

fn part(f: BoxFrame, parts: &[usize]) -> Partition {
    f.partition(parts).expect("fixed partition")
}

fn growth_figure() -> Outcome {
    let g = cgd_from_path(&figures::figure_path(), &figures::figure_chain()).map_err(|e| e.to_string())?;
    let want = figures::growth_example();
    ensure(g == want, || "extension differs from the golden diagram".into())?;
    Ok(format!("{} entries match", g.r() * (g.r() + 1)))
}

fn wall_figure() -> Outcome {
    let top = figures::growth_example();
    let (p, q) = figures::FIGURE_WALL;
    let w = Wall::new(top.r(), p, q).map_err(|e| e.to_string())?;
    let bottom = cross_cgd(&top, w).map_err(|e| e.to_string())?;
    ensure(bottom == figures::wall_crossed_example(), || "crossed diagram differs from the golden one".into())?;
    let back = cross_cgd(&bottom, w).map_err(|e| e.to_string())?;
    ensure(back == top, || "crossing twice does not restore the input".into())?;
    Ok(format!("wall ({p},{q}) reproduced, involution holds"))
}

fn cgd_counts() -> Outcome {
    let mut out = Vec::new();
    for (d, n, want) in [(2, 4, 2u128), (2, 5, 5), (3, 6, 42)] {
        let f = frame(d, n);
        let got = cgd_enumerate(f).len() as u128;
        let hook = f.hook_length_rectangle();
        ensure(got == want && hook == want, || {
            format!("({d},{n}): {got} diagrams, hook formula {hook}, expected {want}")
        })?;
        out.push(format!("({d},{n})={got}"));
    }
    Ok(out.join(", "))
}

/// `c^{▭}_{shape}` by enumerating chains of skew tableaux whose
/// rectification is superstandard of the prescribed shape.
pub fn lr_by_chains(frame: BoxFrame, shape: &[Partition]) -> u64 {
    fn go(frame: BoxFrame, inner: &Partition, shape: &[Partition]) -> u64 {
        let Some((first, rest)) = shape.split_first() else {
            return u64::from(inner.is_rectangle() && inner.size() == frame.area());
        };
        let target = ChainTableau::superstandard(first);
        frame
            .partitions_of_size(inner.size() + first.size())
            .into_iter()
            .filter(|outer| outer.contains(inner))
            .map(|outer| {
                let n = ChainTableau::all(&outer, inner).iter().filter(|t| rectify(t) == target).count() as u64;
                if n == 0 {
                    0
                } else {
                    n * go(frame, &outer, rest)
                }
            })
            .sum()
    }
    go(frame, &frame.empty(), shape)
}

fn shapes_with_r(f: BoxFrame, r: usize) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![vec![]];
    let nonempty: Vec<Partition> = f.partitions().into_iter().filter(|p| !p.is_empty()).collect();
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|s| {
                nonempty.iter().map(move |p| {
                    let mut t = s.clone();
                    t.push(p.clone());
                    t
                })
            })
            .filter(|s| s.iter().map(Partition::size).sum::<usize>() <= f.area())
            .collect();
    }
    out.retain(|s| s.iter().map(Partition::size).sum::<usize>() == f.area());
    out
}

fn decgd_counts() -> Outcome {
    let f24 = frame(2, 4);
    let mut shapes: Vec<(BoxFrame, Vec<Partition>)> = Vec::new();
    for r in [3, 4] {
        shapes.extend(shapes_with_r(f24, r).into_iter().map(|s| (f24, s)));
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
        shapes.push((f25, s.iter().map(|p| part(f25, p)).collect()));
    }
    for (f, shape) in &shapes {
        let got = decgd_enumerate(*f, shape).map_err(|e| e.to_string())?.len() as u64;
        let want = lr_by_chains(*f, shape);
        ensure(got == want, || format!("{}: {got} decgds, LR coefficient {want}", shape_str(shape)))?;
    }
    Ok(format!("{} shapes agree", shapes.len()))
}

fn shape_str(shape: &[Partition]) -> String {
    shape.iter().map(Partition::compact).collect::<Vec<_>>().join(";")
}

fn g24_conic() -> Outcome {
    let f = frame(2, 4);
    let FourPoint::Conic(rep) = four_point_solve(f, &f.single_box(), &f.single_box()).map_err(|e| e.to_string())?
    else {
        return Err("(□,□) is not a conic".into());
    };
    ensure(rep.coefficients == [1, 2, 2, 3], || format!("coefficients {:?}", rep.coefficients))?;
    let disc = rep.discriminant_in_u();
    ensure(disc == Poly::from_ints(&[4, -4, 4]), || format!("discriminant {}", disc.display("τ")))?;
    ensure(rep.unbranched(), || "conic is branched over a real point".into())?;
    Ok("u² − 2u − 2τu + 3τ = 0, discriminant 4(τ² − τ + 1)".into())
}

fn six_point() -> Outcome {
    let mut conics = 0;
    for n in 4..=6 {
        let f = frame(2, n);
        let (one_one, two) = (part(f, &[1, 1]), part(f, &[2]));
        for lambda in f.partitions() {
            let Some(rest) = (f.area() - 2).checked_sub(lambda.size()) else { continue };
            for mu in f.partitions_of_size(rest) {
                let FourPoint::Conic(rep) = four_point_solve(f, &lambda, &mu).map_err(|e| e.to_string())? else {
                    continue;
                };
                ensure(rep.u_monotone(), || format!("τ(u) not monotone for ({lambda},{mu})"))?;
                let cycle = six_point_cycle(f, &lambda, &mu).map_err(|e| e.to_string())?;
                let (k1, k2) = (rep.kappa1.clone(), rep.kappa2.clone());
                let want = vec![k1.clone(), k2.clone(), one_one.clone(), k2, k1, two.clone()];
                ensure(cycle == want, || format!("({lambda},{mu}) in (2,{n}): cycle {cycle:?}"))?;
                conics += 1;
            }
        }
    }
    for n in [4, 5] {
        let ok = consistency_with_growth(frame(2, n)).map_err(|e| e.to_string())?;
        ensure(ok, || format!("growth consistency fails in (2,{n})"))?;
    }
    Ok(format!("{conics} conics in (2,4)-(2,6), growth consistency on (2,4),(2,5)"))
}

const FL6_ROOTS: [f64; 4] = [0.678121, 0.945553, 1.41011, 1.96622];

fn flag6() -> Outcome {
    let rep = flag6_example();
    ensure(rep.discriminant == Poly::from_ints(&[256, -960, 1281, -720, 144]), || {
        format!("quartic {}", rep.discriminant.display("τ"))
    })?;
    ensure(rep.real_roots.len() == 4, || format!("{} real roots", rep.real_roots.len()))?;
    for (x, w) in rep.real_roots.iter().zip(FL6_ROOTS) {
        ensure((x - w).abs() < 1e-4, || format!("root {x} vs {w}"))?;
    }
    let roots: Vec<String> = rep.real_roots.iter().map(|x| format!("{x:.6}")).collect();
    Ok(format!("roots {}", roots.join(", ")))
}

fn cover_r4() -> Outcome {
    let f = frame(2, 4);
    let shape = vec![f.single_box(); 4];
    let g = build_cover_graph(f, &shape).map_err(|e| e.to_string())?;
    let facets = g.fiber_sizes().len();
    let comps = g.components().len();
    let two_regular = (0..g.nodes.len()).all(|v| g.degree(v) == 2);
    ensure(g.nodes.len() == 6 && g.edges.len() == 6 && facets == 3 && comps == 1 && two_regular, || {
        format!("{} nodes, {} edges, {facets} facets, {comps} components", g.nodes.len(), g.edges.len())
    })?;
    Ok("6 nodes over 3 facets forming one cycle".into())
}

fn properties() -> Outcome {
    let parts: [(&str, Property); 8] = [
        ("shuffle involution", prop_shuffle_involution),
        ("rectification path-independence", prop_rectification),
        ("dual-class counts", prop_dual_class_counts),
        ("glide reflect", prop_glide),
        ("domino lemma", prop_domino),
        ("promotion order", prop_promotion),
        ("matchings", prop_matchings),
        ("fiber counts", prop_fiber_counts),
    ];
    let mut out = Vec::new();
    for (name, f) in parts {
        let n = f().map_err(|e| format!("{name}: {e}"))?;
        out.push(format!("{name} {n}"));
    }
    Ok(out.join(", "))
}

fn small_frames() -> Vec<BoxFrame> {
    vec![frame(2, 4), frame(2, 5), frame(3, 6)]
}

fn prop_shuffle_involution() -> Result<usize, String> {
    let f = frame(2, 4);
    let mut n = 0;
    for a in f.partitions() {
        for b in f.partitions().into_iter().filter(|b| b.contains(&a)) {
            for c in f.partitions().into_iter().filter(|c| c.contains(&b)) {
                for lower in ChainTableau::all(&b, &a) {
                    for upper in ChainTableau::all(&c, &b) {
                        let (x, y) = shuffle(&lower, &upper).map_err(|e| e.to_string())?;
                        let back = shuffle(&x, &y).map_err(|e| e.to_string())?;
                        ensure(back == (lower.clone(), upper.clone()), || format!("{a} ⊂ {b} ⊂ {c}"))?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

fn prop_rectification() -> Result<usize, String> {
    let f = frame(2, 5);
    let mut n = 0;
    for inner in f.partitions() {
        let alphas = ChainTableau::all(&inner, &f.empty());
        for outer in f.partitions().into_iter().filter(|o| o.contains(&inner)) {
            for t in ChainTableau::all(&outer, &inner) {
                let want = rectify(&t);
                for a in &alphas {
                    let (r, _) = shuffle(a, &t).map_err(|e| e.to_string())?;
                    ensure(r == want, || format!("rectification of {t:?} depends on the order"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

fn prop_dual_class_counts() -> Result<usize, String> {
    let f = frame(2, 4);
    let mut n = 0;
    for nu in f.partitions() {
        for mu in f.partitions().into_iter().filter(|m| nu.contains(m)) {
            for lambda in f.partitions_of_size(nu.size() - mu.size()) {
                let got = dual_classes(&nu, &mu, &lambda).len() as u64;
                let want = lr_two(&nu, &mu, &lambda);
                ensure(got == want, || format!("ν={nu} μ={mu} λ={lambda}: {got} classes vs {want}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn all_diagrams() -> Vec<CylGrowthDiagram> {
    small_frames().into_iter().flat_map(cgd_enumerate).collect()
}

fn prop_glide() -> Result<usize, String> {
    let mut n = 0;
    for g in all_diagrams() {
        ensure(is_valid(&g), || "invalid diagram".into())?;
        let r = g.r() as i64;
        for i in -r..2 * r {
            for j in i..=i + r {
                ensure(g.get(i, j) == &g.get(j, i + r).complement() && g.get(i, j) == g.get(i + r, j + r), || {
                    format!("glide fails at ({i},{j})")
                })?;
            }
        }
        n += 1;
    }
    Ok(n)
}

/// Second box of a two-box growth northeast of the first (earlier row, or the
/// same row) gives `(2)`; otherwise `(1,1)`.
fn prop_domino() -> Result<usize, String> {
    let mut n = 0;
    for g in all_diagrams() {
        let f = g.frame();
        let r = g.r() as i64;
        for i in 0..r {
            for j in i..=i + r - 2 {
                let (a, b, c) = (g.get(i, j), g.get(i, j + 1), g.get(i, j + 2));
                let (Some(first), Some(second)) = (a.added_cell(b), b.added_cell(c)) else {
                    return Err(format!("({i},{j}) is not a chain"));
                };
                let want = if second.0 <= first.0 { &[2][..] } else { &[1, 1][..] };
                ensure(g.get(j, j + 2).parts() == want, || format!("{f:?} ({i},{j}): got {}", g.get(j, j + 2)))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn prop_promotion() -> Result<usize, String> {
    let mut n = 0;
    for f in small_frames() {
        for t in ChainTableau::all(&f.rectangle(), &f.empty()) {
            let mut x = t.clone();
            for _ in 0..f.area() {
                x = promotion(&x).map_err(|e| e.to_string())?;
            }
            ensure(x == t, || format!("promotion^r differs in {f:?}"))?;
            n += 1;
        }
    }
    Ok(n)
}

fn prop_matchings() -> Result<usize, String> {
    let mut n = 0;
    for f in [frame(2, 4), frame(2, 5)] {
        let row0 = PathThroughI::row(0, f.area());
        for g in cgd_enumerate(f) {
            let m = matching_of_cgd(&g).map_err(|e| e.to_string())?;
            ensure(cgd_of_matching(&m).map_err(|e| e.to_string())? == g, || "round trip fails".into())?;
            let promoted = promotion(&g.row_tableau(0)).map_err(|e| e.to_string())?;
            let shifted = cgd_from_path(&row0, &promoted).map_err(|e| e.to_string())?;
            let m2 = matching_of_cgd(&shifted).map_err(|e| e.to_string())?;
            ensure(m2 == m.rotate(-1), || format!("rotation and promotion disagree for {:?}", m.pairs()))?;
            n += 1;
        }
    }
    Ok(n)
}

fn prop_fiber_counts() -> Result<usize, String> {
    let mut n = 0;
    let cases = [(frame(2, 4), 4), (frame(2, 5), 4), (frame(2, 5), 5)];
    for (f, r) in cases {
        let trees = LabeledTree::all(r);
        for shape in shapes_with_r(f, r) {
            let want = lr_coefficient(&f.rectangle(), &shape).map_err(|e| e.to_string())?;
            for t in &trees {
                let got = fiber_count(f, t, &shape).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("{}: tree {:?} gives {got}, expected {want}", shape_str(&shape), t.splits())
                })?;
            }
            n += 1;
        }
    }
    Ok(n)
}
