//! Cylindrical growth diagrams: construction from a path, validation,
//! enumeration, promotion, caterpillar labels and the `d = 2` matching
//! bijection.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{BoxFrame, Partition, PartitionError};
use crate::tableaux::{local_rule, ChainTableau, TableauError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CylError {
    #[error("path is invalid: {0}")]
    BadPath(String),
    #[error("chain has {chain} steps but the path has {path}")]
    LengthMismatch { chain: usize, path: usize },
    #[error("chain must run from the empty partition to the rectangle of {0}")]
    NotAnchored(BoxFrame),
    #[error("period {r} differs from d(n-d) = {area}")]
    PeriodMismatch { r: usize, area: usize },
    #[error("recursion did not close up periodically")]
    NotPeriodic,
    #[error("matchings need d = 2, got frame {0}")]
    NotTwoRow(BoxFrame),
    #[error("invalid matching: {0}")]
    BadMatching(String),
    #[error("invalid diagram: {0}")]
    Invalid(#[from] CgdViolation),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// First violated condition found by [`cgd_validate`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CgdViolation {
    #[error("expected {expected} rows of length {} , found a different layout", expected + 1)]
    Layout { expected: usize },
    #[error("entry ({i},{j}) is in frame {found}, expected {expected}")]
    Frame { i: i64, j: i64, found: BoxFrame, expected: BoxFrame },
    #[error("boundary entry ({i},{j}) is {found}, expected {expected}")]
    Boundary { i: i64, j: i64, found: String, expected: String },
    #[error("entry ({i},{j}) = {found} does not have {size} boxes")]
    Size { i: i64, j: i64, found: String, size: i64 },
    #[error("step ({i},{j}) -> ({i2},{j2}) does not add a single box")]
    Step { i: i64, j: i64, i2: i64, j2: i64 },
    #[error("square with bottom corner ({i},{j}) breaks the local rule")]
    LocalRule { i: i64, j: i64 },
    #[error("glide reflection fails at ({i},{j})")]
    Glide { i: i64, j: i64 },
}

/// A path through `𝕀 = {(i,j) : i ≤ j ≤ i+r}` starting on the diagonal and
/// taking unit steps up `(−1,0)` or right `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathThroughI {
    steps: Vec<(i64, i64)>,
}

impl PathThroughI {
    pub fn new(steps: Vec<(i64, i64)>) -> Result<Self, CylError> {
        let first = *steps.first().ok_or_else(|| CylError::BadPath("empty".into()))?;
        if first.0 != first.1 {
            return Err(CylError::BadPath(format!("starts off the diagonal at {first:?}")));
        }
        for w in steps.windows(2) {
            let (a, b) = (w[0], w[1]);
            let up = b.0 == a.0 - 1 && b.1 == a.1;
            let right = b.0 == a.0 && b.1 == a.1 + 1;
            if !up && !right {
                return Err(CylError::BadPath(format!("step {a:?} -> {b:?}")));
            }
        }
        Ok(PathThroughI { steps })
    }

    /// `(i,i) → (i,i+1) → ⋯ → (i,i+r)`.
    pub fn row(i: i64, r: usize) -> Self {
        PathThroughI { steps: (0..=r as i64).map(|t| (i, i + t)).collect() }
    }

    pub fn steps(&self) -> &[(i64, i64)] {
        &self.steps
    }

    /// Number of steps, which is `j_r − i_r` at the end.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.steps.len() == 1
    }
}

/// `γ_{ij}` on the fundamental domain `i ∈ [0,r)`, `j ∈ [i, i+r]`; every
/// lookup goes through the periodic accessor [`CylGrowthDiagram::get`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct CylGrowthDiagram {
    frame: BoxFrame,
    r: usize,
    rows: Vec<Vec<Partition>>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    frame: BoxFrame,
    r: usize,
    rows: Vec<Vec<Vec<usize>>>,
}

impl From<CylGrowthDiagram> for DiagramRepr {
    fn from(g: CylGrowthDiagram) -> Self {
        let rows = g.rows.iter().map(|row| row.iter().map(|p| p.parts().to_vec()).collect()).collect();
        DiagramRepr { frame: g.frame, r: g.r, rows }
    }
}

impl TryFrom<DiagramRepr> for CylGrowthDiagram {
    type Error = CylError;

    fn try_from(d: DiagramRepr) -> Result<Self, CylError> {
        let frame = BoxFrame::new(d.frame.d, d.frame.n)?;
        let rows = d
            .rows
            .iter()
            .map(|row| row.iter().map(|p| Partition::new(frame, p)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        CylGrowthDiagram::from_rows(frame, rows)
    }
}

impl CylGrowthDiagram {
    /// Builds a diagram from explicit rows `γ_{i,i..i+r}`, `i ∈ [0,r)`.
    /// Only the layout is checked here; see [`cgd_validate`].
    pub fn from_rows(frame: BoxFrame, rows: Vec<Vec<Partition>>) -> Result<Self, CylError> {
        let r = rows.len();
        if r == 0 || rows.iter().any(|row| row.len() != r + 1) {
            return Err(CgdViolation::Layout { expected: r }.into());
        }
        Ok(CylGrowthDiagram { frame, r, rows })
    }

    pub fn frame(&self) -> BoxFrame {
        self.frame
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> &[Vec<Partition>] {
        &self.rows
    }

    pub fn contains_index(&self, i: i64, j: i64) -> bool {
        j >= i && j - i <= self.r as i64
    }

    /// `γ_{ij}` for any `(i,j) ∈ 𝕀`, using `γ_{(i+r)(j+r)} = γ_{ij}`.
    pub fn get(&self, i: i64, j: i64) -> &Partition {
        assert!(self.contains_index(i, j), "({i},{j}) is outside the index set");
        let r = self.r as i64;
        let i0 = i.rem_euclid(r);
        &self.rows[i0 as usize][(j - i) as usize]
    }

    /// Row `i` as a tableau `γ_{ii} ⊂ ⋯ ⊂ γ_{i(i+r)}`.
    pub fn row_tableau(&self, i: i64) -> ChainTableau {
        let r = self.r as i64;
        ChainTableau::new(self.rows[i.rem_euclid(r) as usize].clone()).expect("rows are chains")
    }

    /// Figure-style text: one line per row, shifted right by its index.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(Partition::compact).collect();
            let width = cells.iter().map(String::len).max().unwrap_or(1) + 1;
            out.push_str(&" ".repeat(i * width));
            out.push_str(cells.iter().map(|c| format!("{c:<width$}")).collect::<String>().trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CylGrowthDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The unique cylindrical growth diagram agreeing with `chain` along `path`.
///
/// Right-then-up corners are flipped until every up step leads the path;
/// a leading up step out of `(i,i)` is re-anchored as a right step out of
/// `(i−1,i−1)`. The resulting row is then propagated downward.
pub fn cgd_from_path(path: &PathThroughI, chain: &ChainTableau) -> Result<CylGrowthDiagram, CylError> {
    let frame = chain.frame();
    let r = frame.area();
    if chain.len() != path.len() {
        return Err(CylError::LengthMismatch { chain: chain.len(), path: path.len() });
    }
    if path.len() != r {
        return Err(CylError::PeriodMismatch { r: path.len(), area: r });
    }
    if !chain.inner().is_empty() || !chain.outer().is_rectangle() {
        return Err(CylError::NotAnchored(frame));
    }
    let mut pts = path.steps().to_vec();
    let mut vals = chain.chain().to_vec();
    for (&(i, j), v) in pts.iter().zip(&vals) {
        if v.size() as i64 != j - i {
            return Err(CylError::BadPath(format!("entry at ({i},{j}) has {} boxes", v.size())));
        }
    }
    loop {
        let corner = (1..r).find(|&k| {
            let (a, b, c) = (pts[k - 1], pts[k], pts[k + 1]);
            a.0 == b.0 && c.0 == b.0 - 1
        });
        if let Some(k) = corner {
            let (i, j) = pts[k];
            vals[k] = local_rule(&vals[k - 1], &vals[k], &vals[k + 1])?;
            pts[k] = (i - 1, j - 1);
            continue;
        }
        if pts[1].0 == pts[0].0 - 1 {
            pts[0] = (pts[0].0 - 1, pts[0].1 - 1);
            continue;
        }
        break;
    }
    let top = pts[0].0;
    let mut row = vals;
    let mut rows: Vec<Option<Vec<Partition>>> = vec![None; r];
    rows[top.rem_euclid(r as i64) as usize] = Some(row.clone());
    let first = row.clone();
    for t in 1..=r as i64 {
        let mut next = Vec::with_capacity(r + 1);
        next.push(frame.empty());
        for s in 0..r - 1 {
            next.push(local_rule(&next[s], &row[s + 1], &row[s + 2])?);
        }
        next.push(frame.rectangle());
        row = next;
        if t < r as i64 {
            rows[(top + t).rem_euclid(r as i64) as usize] = Some(row.clone());
        }
    }
    if row != first {
        return Err(CylError::NotPeriodic);
    }
    let rows = rows.into_iter().map(|x| x.expect("every residue filled")).collect();
    Ok(CylGrowthDiagram { frame, r, rows })
}

/// Checks boundary values, sizes, single-box steps, the local rule on every
/// square and glide reflection `γ_{ij} = γ^C_{j(i+r)}`.
pub fn cgd_validate(g: &CylGrowthDiagram) -> Result<(), CgdViolation> {
    let r = g.r as i64;
    let frame = g.frame;
    if g.rows.len() != g.r || g.rows.iter().any(|row| row.len() != g.r + 1) {
        return Err(CgdViolation::Layout { expected: g.r });
    }
    for i in 0..r {
        for j in i..=i + r {
            let p = g.get(i, j);
            if p.frame() != frame {
                return Err(CgdViolation::Frame { i, j, found: p.frame(), expected: frame });
            }
            if p.size() as i64 != j - i {
                return Err(CgdViolation::Size { i, j, found: p.to_string(), size: j - i });
            }
        }
    }
    let unit = frame.single_box();
    let boundary = [(0, frame.empty()), (1, unit.clone()), (r - 1, unit.complement()), (r, frame.rectangle())];
    for i in 0..r {
        for (off, expected) in &boundary {
            let found = g.get(i, i + off);
            if found != expected {
                return Err(CgdViolation::Boundary {
                    i,
                    j: i + off,
                    found: found.to_string(),
                    expected: expected.to_string(),
                });
            }
        }
    }
    for i in 0..r {
        for j in i..=i + r {
            if j < i + r && g.get(i, j).added_cell(g.get(i, j + 1)).is_none() {
                return Err(CgdViolation::Step { i, j, i2: i, j2: j + 1 });
            }
            if j < i + r && g.get(i, j).added_cell(g.get(i - 1, j)).is_none() {
                return Err(CgdViolation::Step { i, j, i2: i - 1, j2: j });
            }
            if j + 2 <= i + r {
                let ok = local_rule(g.get(i, j), g.get(i - 1, j), g.get(i - 1, j + 1))
                    .map(|m| &m == g.get(i, j + 1))
                    .unwrap_or(false);
                if !ok {
                    return Err(CgdViolation::LocalRule { i, j });
                }
            }
            if g.get(i, j) != &g.get(j, i + r).complement() {
                return Err(CgdViolation::Glide { i, j });
            }
        }
    }
    Ok(())
}

pub fn is_valid(g: &CylGrowthDiagram) -> bool {
    cgd_validate(g).is_ok()
}

/// The chain of entries along `path`.
pub fn read_path(g: &CylGrowthDiagram, path: &PathThroughI) -> ChainTableau {
    let chain = path.steps().iter().map(|&(i, j)| g.get(i, j).clone()).collect();
    ChainTableau::new(chain).expect("paths through a diagram read chains")
}

/// One diagram per standard tableau of the rectangle, seeded along row 0 in
/// lexicographic order of the tableau.
pub fn cgd_enumerate(frame: BoxFrame) -> Vec<CylGrowthDiagram> {
    let seeds = ChainTableau::all(&frame.rectangle(), &frame.empty());
    let path = PathThroughI::row(0, frame.area());
    seeds.par_iter().map(|t| cgd_from_path(&path, t).expect("every tableau of the rectangle extends")).collect()
}

/// Promotion of a standard tableau of the rectangle: row 1 of the diagram
/// whose row 0 is `t`.
pub fn promotion(t: &ChainTableau) -> Result<ChainTableau, CylError> {
    let frame = t.frame();
    let g = cgd_from_path(&PathThroughI::row(0, frame.area()), t)?;
    Ok(g.row_tableau(1))
}

/// Marked-point order and node labels of the caterpillar curve attached to
/// a path, over the facet with circular order `1, 2, …, r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Caterpillar {
    /// `π(1), …, π(r)`, so that `π([k]) = [i_k, j_k)` modulo `r`.
    pub permutation: Vec<usize>,
    /// Labels `γ_{i_k j_k}` of the `r − 3` nodes, `2 ≤ k ≤ r − 2`.
    pub node_labels: Vec<Partition>,
}

pub fn caterpillar_labels(g: &CylGrowthDiagram, path: &PathThroughI) -> Caterpillar {
    let r = g.r as i64;
    let label = |m: i64| (m - 1).rem_euclid(r) as usize + 1;
    let steps = path.steps();
    let permutation =
        steps.windows(2).map(|w| if w[1].0 == w[0].0 - 1 { label(w[1].0) } else { label(w[0].1) }).collect();
    let node_labels = (2..=(g.r.saturating_sub(2))).map(|k| g.get(steps[k].0, steps[k].1).clone()).collect();
    Caterpillar { permutation, node_labels }
}

/// A noncrossing perfect matching of the points `1..=r` on a circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NoncrossingMatching {
    r: usize,
    pairs: Vec<(usize, usize)>,
}

impl NoncrossingMatching {
    pub fn new(r: usize, pairs: &[(usize, usize)]) -> Result<Self, CylError> {
        let mut norm: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        norm.sort_unstable();
        let mut seen = vec![false; r + 1];
        for &(a, b) in &norm {
            if a == 0 || b > r || a == b || seen[a] || seen[b] {
                return Err(CylError::BadMatching(format!("{pairs:?} is not a perfect matching of 1..={r}")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(CylError::BadMatching(format!("{pairs:?} leaves points unmatched")));
        }
        for (x, &(a, b)) in norm.iter().enumerate() {
            for &(c, e) in &norm[x + 1..] {
                if (a < c && c < b && b < e) || (c < a && a < e && e < b) {
                    return Err(CylError::BadMatching(format!("chords {a}-{b} and {c}-{e} cross")));
                }
            }
        }
        Ok(NoncrossingMatching { r, pairs: norm })
    }

    /// All noncrossing matchings of `r` points, sorted.
    pub fn all(r: usize) -> Vec<NoncrossingMatching> {
        fn go(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
            if points.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for k in (1..points.len()).step_by(2) {
                for inside in go(&points[1..k]) {
                    for outside in go(&points[k + 1..]) {
                        let mut m = vec![(points[0], points[k])];
                        m.extend(inside.iter().copied());
                        m.extend(outside.iter().copied());
                        out.push(m);
                    }
                }
            }
            out
        }
        if r % 2 == 1 {
            return Vec::new();
        }
        let points: Vec<usize> = (1..=r).collect();
        let mut all: Vec<_> = go(&points)
            .into_iter()
            .map(|m| NoncrossingMatching::new(r, &m).expect("recursive matchings are noncrossing"))
            .collect();
        all.sort();
        all
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Relabels point `x` as `x + k` modulo `r`.
    pub fn rotate(&self, k: i64) -> NoncrossingMatching {
        let r = self.r as i64;
        let f = |x: usize| ((x as i64 - 1 + k).rem_euclid(r) + 1) as usize;
        let pairs: Vec<_> = self.pairs.iter().map(|&(a, b)| (f(a), f(b))).collect();
        NoncrossingMatching::new(self.r, &pairs).expect("rotation preserves noncrossing")
    }
}

/// Arcs `{i,j}` with `γ_{(i+1)j} = (s,s)` and `γ_{i(j+1)} = (s+1,s+1)`.
pub fn matching_of_cgd(g: &CylGrowthDiagram) -> Result<NoncrossingMatching, CylError> {
    if g.frame.d != 2 {
        return Err(CylError::NotTwoRow(g.frame));
    }
    let r = g.r as i64;
    let square = |p: &Partition| p.row(0) == p.row(1);
    let mut pairs = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            let inner = g.get(i + 1, j);
            let outer = g.get(i, j + 1);
            if square(inner) && square(outer) && outer.row(0) == inner.row(0) + 1 {
                pairs.push((i as usize, j as usize));
            }
        }
    }
    NoncrossingMatching::new(g.r, &pairs)
}

/// `γ_{ij} = (s+t, s)` where `s` arcs lie inside `{i, …, j−1}` and `t` arcs
/// leave it.
pub fn cgd_of_matching(m: &NoncrossingMatching) -> Result<CylGrowthDiagram, CylError> {
    let r = m.r;
    let frame = BoxFrame::new(2, r / 2 + 2)?;
    let rows = (0..r as i64)
        .map(|i| {
            (i..=i + r as i64)
                .map(|j| {
                    let inside = |x: usize| (i..j).any(|k| (k - 1).rem_euclid(r as i64) as usize + 1 == x);
                    let (mut s, mut t) = (0, 0);
                    for &(a, b) in &m.pairs {
                        match (inside(a), inside(b)) {
                            (true, true) => s += 1,
                            (true, false) | (false, true) => t += 1,
                            _ => {}
                        }
                    }
                    Partition::new(frame, &[s + t, s])
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let g = CylGrowthDiagram::from_rows(frame, rows)?;
    cgd_validate(&g)?;
    Ok(g)
}
