//! Facets and walls of the real moduli space of `r` marked points, wall
//! crossing on growth diagrams, the covering graph over the facets, and
//! fiber counts over dual trees.
//!
//! Positions on a circular order are numbered `0..r` and position `m` is the
//! step `γ_{m(m+1)}` of a diagram, so a diagram over the order `s` has shape
//! `(λ_{s[0]}, …, λ_{s[r−1]})`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cylgrowth::{cgd_enumerate, cgd_from_path, CylError, CylGrowthDiagram, PathThroughI};
use crate::decgd::{decgd_enumerate, lift_decgd_canonical, restrict_cgd_at, Decgd, DecgdError, Iota};
use crate::partitions::{lr_coefficient, BoxFrame, Partition, PartitionError};
use crate::tableaux::ChainTableau;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("wall ({p},{q}) reverses {len} positions; r = {r} allows 2..={max}", len = *r as i64 - (q - p), max = r.saturating_sub(2))]
    BadWall { p: i64, q: i64, r: usize },
    #[error("not an arrangement of 1..={r}: {order:?}")]
    BadOrder { order: Vec<usize>, r: usize },
    #[error("shape sizes sum to {got}, but Σ|λᵢ| = d(n−d) requires {area}")]
    SizeMismatch { got: usize, area: usize },
    #[error("need at least 3 marked points, got {0}")]
    TooFewPoints(usize),
    #[error("wall crossing is inconsistent: {0}")]
    Inconsistent(String),
    #[error("crossing left the fiber over facet {0}")]
    MissingNode(String),
    #[error("invalid split {0:?}")]
    BadSplit(Vec<usize>),
    #[error("splits {0:?} and {1:?} are not compatible")]
    Incompatible(Vec<usize>, Vec<usize>),
    #[error("unknown format {0:?} (expected json, dot or text)")]
    UnknownFormat(String),
    #[error(transparent)]
    Decgd(Box<DecgdError>),
    #[error(transparent)]
    Cyl(#[from] CylError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

impl From<DecgdError> for CoverError {
    fn from(e: DecgdError) -> Self {
        CoverError::Decgd(Box::new(e))
    }
}

/// A dihedral class of arrangements of `1..=r` on a circle, held by its
/// representative that starts at label 1 and reads in the lexicographically
/// smaller direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CircularOrder {
    order: Vec<usize>,
}

/// How a raw arrangement `s` maps onto its canonical representative `s'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reindex {
    /// `s'[m] = s[m+k]`.
    Rotate(i64),
    /// `s'[m] = s[c−m]`.
    Reflect(i64),
}

fn check_arrangement(order: &[usize]) -> Result<(), CoverError> {
    let r = order.len();
    let mut seen = vec![false; r + 1];
    for &t in order {
        if t == 0 || t > r || seen[t] {
            return Err(CoverError::BadOrder { order: order.to_vec(), r });
        }
        seen[t] = true;
    }
    Ok(())
}

impl CircularOrder {
    /// Canonical form of an arbitrary arrangement together with the
    /// re-indexing that produced it.
    pub fn canonicalize(raw: &[usize]) -> Result<(CircularOrder, Reindex), CoverError> {
        check_arrangement(raw)?;
        let r = raw.len() as i64;
        let m0 =
            raw.iter().position(|&t| t == 1).ok_or(CoverError::BadOrder { order: raw.to_vec(), r: raw.len() })? as i64;
        let at = |m: i64| raw[m.rem_euclid(r) as usize];
        let rot: Vec<usize> = (0..r).map(|m| at(m + m0)).collect();
        let refl: Vec<usize> = (0..r).map(|m| at(m0 - m)).collect();
        Ok(if rot <= refl {
            (CircularOrder { order: rot }, Reindex::Rotate(m0))
        } else {
            (CircularOrder { order: refl }, Reindex::Reflect(m0))
        })
    }

    pub fn new(order: &[usize]) -> Result<CircularOrder, CoverError> {
        Ok(Self::canonicalize(order)?.0)
    }

    pub fn identity(r: usize) -> CircularOrder {
        CircularOrder { order: (1..=r).collect() }
    }

    pub fn labels(&self) -> &[usize] {
        &self.order
    }

    pub fn r(&self) -> usize {
        self.order.len()
    }

    /// Label at position `m`, read cyclically.
    pub fn at(&self, m: i64) -> usize {
        self.order[m.rem_euclid(self.r() as i64) as usize]
    }

    /// The arrangement after reversing `w`, before canonicalization.
    pub fn crossed_raw(&self, w: Wall) -> Result<Vec<usize>, CoverError> {
        let r = self.r();
        w.check(r)?;
        let mut out = self.order.clone();
        let len = w.reversed_len(r);
        for t in 0..len {
            out[(w.q + t).rem_euclid(r as i64) as usize] = self.at(w.p + r as i64 - 1 - t);
        }
        Ok(out)
    }
}

impl TryFrom<Vec<usize>> for CircularOrder {
    type Error = CoverError;

    fn try_from(v: Vec<usize>) -> Result<Self, CoverError> {
        let c = CircularOrder::new(&v)?;
        if c.order != v {
            return Err(CoverError::BadOrder { order: v, r: c.r() });
        }
        Ok(c)
    }
}

impl From<CircularOrder> for Vec<usize> {
    fn from(c: CircularOrder) -> Self {
        c.order
    }
}

impl fmt::Display for CircularOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.order.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All `(r−1)!/2` facets, sorted.
pub fn facets(r: usize) -> Vec<CircularOrder> {
    if r < 3 {
        return vec![CircularOrder::identity(r)];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (2..=r).collect();
    permute(&mut rest, 0, &mut |perm| {
        if perm[0] < perm[perm.len() - 1] {
            let mut order = vec![1];
            order.extend_from_slice(perm);
            out.push(CircularOrder { order });
        }
    });
    out.sort();
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// The wall `(p,q)`: positions `q, q+1, …, p+r−1` (mod `r`) are reversed
/// while `p, …, q−1` stay put. `(p,q)` and `(q, p+r)` give the same facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Wall {
    pub p: i64,
    pub q: i64,
}

impl From<[i64; 2]> for Wall {
    fn from(a: [i64; 2]) -> Self {
        Wall { p: a[0], q: a[1] }
    }
}

impl From<Wall> for [i64; 2] {
    fn from(w: Wall) -> Self {
        [w.p, w.q]
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl Wall {
    pub fn new(r: usize, p: i64, q: i64) -> Result<Wall, CoverError> {
        let w = Wall { p, q };
        w.check(r)?;
        Ok(w)
    }

    /// The wall reversing `len` positions starting at `start`.
    pub fn reversing(r: usize, start: i64, len: usize) -> Result<Wall, CoverError> {
        Wall::new(r, start + len as i64 - r as i64, start)
    }

    pub fn check(&self, r: usize) -> Result<(), CoverError> {
        let gap = self.q - self.p;
        if r < 4 || gap < 2 || gap > r as i64 - 2 {
            return Err(CoverError::BadWall { p: self.p, q: self.q, r });
        }
        Ok(())
    }

    pub fn reversed_len(&self, r: usize) -> i64 {
        self.p + r as i64 - self.q
    }

    pub fn complement(&self, r: usize) -> Wall {
        Wall { p: self.q, q: self.p + r as i64 }
    }

    /// One wall per chord of the `r`-gon: `0 ≤ p < q < r`.
    pub fn all(r: usize) -> Vec<Wall> {
        let r = r as i64;
        (0..r).flat_map(|p| (p + 2..r).filter(move |&q| q - p <= r - 2).map(move |q| Wall { p, q })).collect()
    }
}

/// Canonical facet obtained by crossing `w`.
pub fn cross_facet(f: &CircularOrder, w: Wall) -> Result<CircularOrder, CoverError> {
    CircularOrder::new(&f.crossed_raw(w)?)
}

/// The diagram over the crossed facet (positions as in
/// [`CircularOrder::crossed_raw`]). It agrees with `g` on `p ≤ i ≤ j ≤ q` and
/// satisfies `γ_{ij} = γ̂_{(p+q−j)(p+q−i)}` on `q ≤ i ≤ j ≤ p+r`.
pub fn cross_cgd(g: &CylGrowthDiagram, w: Wall) -> Result<CylGrowthDiagram, CoverError> {
    let r = g.r();
    w.check(r)?;
    let (p, q, ri) = (w.p, w.q, r as i64);
    let mut steps = Vec::with_capacity(r + 1);
    let mut chain = Vec::with_capacity(r + 1);
    for j in p..=q {
        steps.push((p, j));
        chain.push(g.get(p, j).clone());
    }
    for i in (q - ri..p).rev() {
        steps.push((i, q));
        chain.push(g.get(p + q - i, p + ri).complement());
    }
    let chain = ChainTableau::new(chain).map_err(|e| CoverError::Inconsistent(e.to_string()))?;
    let hat = cgd_from_path(&PathThroughI::new(steps)?, &chain)?;
    for i in p..=q {
        for j in i..=q {
            if hat.get(i, j) != g.get(i, j) {
                return Err(CoverError::Inconsistent(format!("copied triangle differs at ({i},{j})")));
            }
        }
    }
    for i in q..=p + ri {
        for j in i..=p + ri {
            if g.get(i, j) != hat.get(p + q - j, p + q - i) {
                return Err(CoverError::Inconsistent(format!("reflected triangle differs at ({i},{j})")));
            }
        }
    }
    Ok(hat)
}

/// The decgd over the crossed facet: lift, cross the corresponding fine
/// wall, restrict along the reversed block sizes.
pub fn cross_decgd(dg: &Decgd, w: Wall) -> Result<Decgd, CoverError> {
    let r = dg.r();
    w.check(r)?;
    let sizes = dg.sizes();
    let iota = Iota::new(&sizes, 0);
    let fine = lift_decgd_canonical(dg)?;
    let hat = cross_cgd(&fine, Wall { p: iota.at(w.p), q: iota.at(w.q) })?;
    let mut new_sizes = sizes.clone();
    for t in 0..w.reversed_len(r) {
        new_sizes[(w.q + t).rem_euclid(r as i64) as usize] =
            sizes[(w.p + r as i64 - 1 - t).rem_euclid(r as i64) as usize];
    }
    let offset = iota.at(w.p) - Iota::new(&new_sizes, 0).at(w.p);
    Ok(restrict_cgd_at(&hat, &new_sizes, offset)?)
}

/// Reads a diagram in the coordinates of the canonical facet.
pub fn reindex_cgd(g: &CylGrowthDiagram, how: Reindex) -> CylGrowthDiagram {
    let r = g.r() as i64;
    let rows = (0..r)
        .map(|i| {
            (i..=i + r)
                .map(|j| match how {
                    Reindex::Rotate(k) => g.get(i + k, j + k).clone(),
                    Reindex::Reflect(c) => g.get(c + 1 - j, c + 1 - i).clone(),
                })
                .collect()
        })
        .collect();
    CylGrowthDiagram::from_rows(g.frame(), rows).expect("layout preserved")
}

pub fn reindex_decgd(dg: &Decgd, how: Reindex) -> Decgd {
    match how {
        Reindex::Rotate(k) => Decgd::from_fn(
            dg.frame(),
            dg.r(),
            |i, j| dg.gamma(i + k, j + k).clone(),
            |i, j| dg.a(i + k, j + k).clone(),
            |i, j| dg.b(i + k, j + k).clone(),
        ),
        Reindex::Reflect(c) => Decgd::from_fn(
            dg.frame(),
            dg.r(),
            |i, j| dg.gamma(c + 1 - j, c + 1 - i).clone(),
            |i, j| dg.b(c + 1 - j, c + 1 - i).clone(),
            |i, j| dg.a(c + 1 - j, c + 1 - i).clone(),
        ),
    }
}

/// The diagram carried by a node of the cover graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoverDiagram {
    Cgd(CylGrowthDiagram),
    Decgd(Decgd),
}

impl CoverDiagram {
    pub fn cross(&self, w: Wall) -> Result<CoverDiagram, CoverError> {
        Ok(match self {
            CoverDiagram::Cgd(g) => CoverDiagram::Cgd(cross_cgd(g, w)?),
            CoverDiagram::Decgd(d) => CoverDiagram::Decgd(cross_decgd(d, w)?),
        })
    }

    pub fn reindex(&self, how: Reindex) -> CoverDiagram {
        match self {
            CoverDiagram::Cgd(g) => CoverDiagram::Cgd(reindex_cgd(g, how)),
            CoverDiagram::Decgd(d) => CoverDiagram::Decgd(reindex_decgd(d, how)),
        }
    }

    /// `γ_{ij}` in the diagram's own (coarse) coordinates.
    pub fn gamma(&self, i: i64, j: i64) -> &Partition {
        match self {
            CoverDiagram::Cgd(g) => g.get(i, j),
            CoverDiagram::Decgd(d) => d.gamma(i, j),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            CoverDiagram::Cgd(g) => g.to_text(),
            CoverDiagram::Decgd(d) => {
                let r = d.r() as i64;
                (0..r)
                    .map(|k| {
                        let row: Vec<String> = (k..=k + r).map(|l| d.gamma(k, l).compact()).collect();
                        format!("{}{}\n", "  ".repeat(k as usize), row.join(" "))
                    })
                    .collect()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverNode {
    pub facet: CircularOrder,
    pub diagram: CoverDiagram,
}

/// An edge between the nodes on either side of a wall; `wall` is written in
/// the coordinates of the `from` facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverEdge {
    pub from: usize,
    pub to: usize,
    pub wall: Wall,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyGraph {
    pub nodes: Vec<CoverNode>,
    pub edges: Vec<CoverEdge>,
}

impl MonodromyGraph {
    /// Number of nodes over each facet.
    pub fn fiber_sizes(&self) -> BTreeMap<CircularOrder, usize> {
        let mut out = BTreeMap::new();
        for n in &self.nodes {
            *out.entry(n.facet.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Connected components as sorted node lists, ordered by least node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut out = Vec::new();
        for s in 0..self.nodes.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The label `γ_{pq}` of the stable curve on the wall of an edge, seen
    /// from the `from` node; the other side reads its complement.
    pub fn edge_label(&self, e: &CoverEdge) -> Partition {
        self.nodes[e.from].diagram.gamma(e.wall.p, e.wall.q).clone()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v || e.to == v).count()
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Json => serde_json::to_string_pretty(self).expect("graph serializes") + "\n",
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Text => self.to_text(),
        }
    }

    fn to_dot(&self) -> String {
        let mut out = String::from("graph cover {\n");
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{} #{}\"];\n", n.facet, self.diagram_index(i)));
        }
        for e in &self.edges {
            out.push_str(&format!("  n{} -- n{} [label=\"{}\"];\n", e.from, e.to, e.wall));
        }
        out.push_str("}\n");
        out
    }

    fn to_text(&self) -> String {
        let mut out = format!("{} nodes, {} edges\n", self.nodes.len(), self.edges.len());
        for (i, n) in self.nodes.iter().enumerate() {
            out.push_str(&format!("node {i}: facet {}\n", n.facet));
            out.push_str(&n.diagram.to_text());
        }
        for e in &self.edges {
            out.push_str(&format!("edge {} -- {} wall {} label {}\n", e.from, e.to, e.wall, self.edge_label(e)));
        }
        out
    }

    fn diagram_index(&self, i: usize) -> usize {
        self.nodes[..i].iter().filter(|n| n.facet == self.nodes[i].facet).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
    Text,
}

impl FromStr for ExportFormat {
    type Err = CoverError;

    fn from_str(s: &str) -> Result<Self, CoverError> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            "text" => Ok(ExportFormat::Text),
            _ => Err(CoverError::UnknownFormat(s.to_string())),
        }
    }
}

fn check_shape(frame: BoxFrame, shape: &[Partition]) -> Result<(), CoverError> {
    for p in shape {
        if p.frame() != frame {
            return Err(PartitionError::FrameMismatch(frame, p.frame()).into());
        }
    }
    let got: usize = shape.iter().map(Partition::size).sum();
    if got != frame.area() {
        return Err(CoverError::SizeMismatch { got, area: frame.area() });
    }
    Ok(())
}

/// `(λ_{s[0]}, …, λ_{s[r−1]})`.
pub fn shape_over(f: &CircularOrder, shape: &[Partition]) -> Vec<Partition> {
    f.labels().iter().map(|&t| shape[t - 1].clone()).collect()
}

/// Diagrams over one facet: ordinary diagrams when every condition is a
/// single box, decgds otherwise.
pub fn fiber(frame: BoxFrame, f: &CircularOrder, shape: &[Partition]) -> Result<Vec<CoverDiagram>, CoverError> {
    if shape.iter().all(|p| p.size() == 1) {
        return Ok(cgd_enumerate(frame).into_iter().map(CoverDiagram::Cgd).collect());
    }
    Ok(decgd_enumerate(frame, &shape_over(f, shape))?.into_iter().map(CoverDiagram::Decgd).collect())
}

/// Facets × diagrams, joined across every wall. Each crossing is checked to
/// be an involution and to land in the enumerated fiber.
pub fn build_cover_graph(frame: BoxFrame, shape: &[Partition]) -> Result<MonodromyGraph, CoverError> {
    check_shape(frame, shape)?;
    let r = shape.len();
    if r < 3 {
        return Err(CoverError::TooFewPoints(r));
    }
    let fs = facets(r);
    let fibers: Vec<Vec<CoverDiagram>> = fs.par_iter().map(|f| fiber(frame, f, shape)).collect::<Result<_, _>>()?;
    let mut nodes = Vec::new();
    let mut index: HashMap<(usize, CoverDiagram), usize> = HashMap::new();
    let facet_index: HashMap<&CircularOrder, usize> = fs.iter().enumerate().map(|(i, f)| (f, i)).collect();
    for (fi, (f, diagrams)) in fs.iter().zip(&fibers).enumerate() {
        for d in diagrams {
            index.insert((fi, d.clone()), nodes.len());
            nodes.push(CoverNode { facet: f.clone(), diagram: d.clone() });
        }
    }
    let walls = Wall::all(r);
    let targets: Vec<Vec<(usize, Wall)>> = nodes
        .par_iter()
        .map(|node| {
            walls
                .iter()
                .map(|&w| {
                    let raw = node.facet.crossed_raw(w)?;
                    let crossed = node.diagram.cross(w)?;
                    if crossed.cross(w)? != node.diagram {
                        return Err(CoverError::Inconsistent(format!("wall {w} is not an involution")));
                    }
                    let (facet, how) = CircularOrder::canonicalize(&raw)?;
                    let key = (facet_index[&facet], crossed.reindex(how));
                    let to = *index.get(&key).ok_or_else(|| CoverError::MissingNode(facet.to_string()))?;
                    Ok((to, w))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let mut edges = Vec::new();
    for (from, ts) in targets.iter().enumerate() {
        for &(to, wall) in ts {
            if from == to {
                return Err(CoverError::Inconsistent(format!("node {from} crosses wall {wall} onto itself")));
            }
            if !targets[to].iter().any(|&(back, _)| back == from) {
                return Err(CoverError::Inconsistent(format!("edge {from} -> {to} has no return")));
            }
            if from < to {
                edges.push(CoverEdge { from, to, wall });
            }
        }
    }
    Ok(MonodromyGraph { nodes, edges })
}

/// An edge of a dual tree: to a leaf, or the internal edge of a split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TreeEdge {
    Leaf(usize),
    Split(usize),
}

/// A tree with leaves `1..=r` given by its internal edges. Each split is
/// stored as the side not containing `r`; the tree is rooted at leaf `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledTree {
    r: usize,
    splits: Vec<Vec<usize>>,
}

/// An internal vertex: the leaves below it, the edge towards leaf `r` and
/// the edges away from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeVertex {
    pub cluster: Vec<usize>,
    pub parent: TreeEdge,
    pub children: Vec<TreeEdge>,
}

fn compatible(a: &[usize], b: &[usize]) -> bool {
    let sub = |x: &[usize], y: &[usize]| x.iter().all(|t| y.binary_search(t).is_ok());
    sub(a, b) || sub(b, a) || a.iter().all(|t| b.binary_search(t).is_err())
}

impl LabeledTree {
    /// Splits may be given from either side; they are normalized to the side
    /// without `r`, sorted and deduplicated.
    pub fn from_splits(r: usize, splits: &[Vec<usize>]) -> Result<LabeledTree, CoverError> {
        if r < 3 {
            return Err(CoverError::TooFewPoints(r));
        }
        let mut norm = Vec::new();
        for s in splits {
            let mut a: Vec<usize> = s.clone();
            a.sort_unstable();
            a.dedup();
            if a.len() != s.len() || a.iter().any(|&t| t == 0 || t > r) {
                return Err(CoverError::BadSplit(s.clone()));
            }
            if a.contains(&r) {
                a = (1..=r).filter(|t| !a.contains(t)).collect();
            }
            if a.len() < 2 || a.len() > r - 2 {
                return Err(CoverError::BadSplit(s.clone()));
            }
            norm.push(a);
        }
        norm.sort();
        norm.dedup();
        for (i, a) in norm.iter().enumerate() {
            for b in &norm[i + 1..] {
                if !compatible(a, b) {
                    return Err(CoverError::Incompatible(a.clone(), b.clone()));
                }
            }
        }
        Ok(LabeledTree { r, splits: norm })
    }

    pub fn star(r: usize) -> LabeledTree {
        LabeledTree { r, splits: Vec::new() }
    }

    /// Splits `{1,2} ⊂ {1,2,3} ⊂ ⋯ ⊂ {1,…,r−2}`.
    pub fn caterpillar(r: usize) -> LabeledTree {
        LabeledTree { r, splits: (2..=r.saturating_sub(2)).map(|k| (1..=k).collect()).collect() }
    }

    /// Every tree with leaves `1..=r`, sorted by split list.
    pub fn all(r: usize) -> Vec<LabeledTree> {
        let mut candidates = Vec::new();
        for mask in 1u64..(1 << (r - 1)) {
            let a: Vec<usize> = (1..r).filter(|t| mask >> (t - 1) & 1 == 1).collect();
            if a.len() >= 2 && a.len() <= r - 2 {
                candidates.push(a);
            }
        }
        candidates.sort();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        grow_families(&candidates, 0, &mut chosen, &mut |fam| out.push(LabeledTree { r, splits: fam.to_vec() }));
        out.sort_by(|a, b| a.splits.cmp(&b.splits));
        out
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn splits(&self) -> &[Vec<usize>] {
        &self.splits
    }

    /// Internal vertices; vertex 0 is the one adjacent to leaf `r` and
    /// vertex `k+1` sits below split `k`.
    pub fn vertices(&self) -> Vec<TreeVertex> {
        let root: Vec<usize> = (1..self.r).collect();
        let mut clusters = vec![(root, TreeEdge::Leaf(self.r))];
        clusters.extend(self.splits.iter().enumerate().map(|(k, s)| (s.clone(), TreeEdge::Split(k))));
        let inside = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|t| b.binary_search(t).is_ok());
        clusters
            .iter()
            .map(|(c, parent)| {
                let mut children: Vec<TreeEdge> = Vec::new();
                let mut covered = Vec::new();
                for (k, s) in self.splits.iter().enumerate() {
                    let maximal = inside(s, c) && !self.splits.iter().any(|t| inside(s, t) && inside(t, c));
                    if maximal {
                        children.push(TreeEdge::Split(k));
                        covered.extend_from_slice(s);
                    }
                }
                children.extend(c.iter().filter(|t| !covered.contains(t)).map(|&t| TreeEdge::Leaf(t)));
                children.sort();
                TreeVertex { cluster: c.clone(), parent: *parent, children }
            })
            .collect()
    }
}

fn grow_families(cands: &[Vec<usize>], from: usize, chosen: &mut Vec<Vec<usize>>, f: &mut impl FnMut(&[Vec<usize>])) {
    f(chosen);
    for i in from..cands.len() {
        if chosen.iter().all(|c| compatible(c, &cands[i])) {
            chosen.push(cands[i].clone());
            grow_families(cands, i + 1, chosen, f);
            chosen.pop();
        }
    }
}

/// Partitions `ν(v,e)` on every incident (internal vertex, edge) pair.
/// Leaf edges carry `λ_t`; the two ends of an internal edge carry
/// complementary partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeLabeling {
    values: BTreeMap<(usize, TreeEdge), Partition>,
}

impl NodeLabeling {
    pub fn get(&self, vertex: usize, edge: TreeEdge) -> Option<&Partition> {
        self.values.get(&(vertex, edge))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, TreeEdge), &Partition)> {
        self.values.iter()
    }

    /// Labels at one vertex, in its edge order (parent first).
    pub fn at_vertex(&self, vertex: usize) -> Vec<&Partition> {
        self.values
            .range((vertex, TreeEdge::Leaf(0))..)
            .take_while(|((v, _), _)| *v == vertex)
            .map(|(_, p)| p)
            .collect()
    }
}

/// Every labeling with `Σ_{e∋v}|ν(v,e)| = d(n−d)` and a nonzero
/// Littlewood–Richardson coefficient at each internal vertex.
pub fn node_labelings(
    frame: BoxFrame,
    tree: &LabeledTree,
    shape: &[Partition],
) -> Result<Vec<NodeLabeling>, CoverError> {
    Ok(weighted_labelings(frame, tree, shape)?.into_iter().map(|(l, _)| l).collect())
}

/// `Σ_ν Π_v c^▭(ν(v,·))`, which equals `c^▭_{λ₁⋯λᵣ}` for every tree.
pub fn fiber_count(frame: BoxFrame, tree: &LabeledTree, shape: &[Partition]) -> Result<u64, CoverError> {
    Ok(weighted_labelings(frame, tree, shape)?.into_iter().map(|(_, w)| w).sum())
}

fn weighted_labelings(
    frame: BoxFrame,
    tree: &LabeledTree,
    shape: &[Partition],
) -> Result<Vec<(NodeLabeling, u64)>, CoverError> {
    check_shape(frame, shape)?;
    if shape.len() != tree.r {
        return Err(CoverError::BadOrder { order: (1..=shape.len()).collect(), r: tree.r });
    }
    let verts = tree.vertices();
    let box_ = frame.rectangle();
    let area = frame.area();
    let k = tree.splits.len();
    let below: Vec<usize> = tree.splits.iter().map(|s| s.iter().map(|&t| shape[t - 1].size()).sum()).collect();
    let options: Vec<Vec<Partition>> = below.iter().map(|&s| frame.partitions_of_size(s)).collect();
    // a vertex is checked once every split touching it is assigned
    let ready: Vec<Vec<usize>> = (0..=k)
        .map(|m| {
            (0..verts.len())
                .filter(|&v| {
                    let last = std::iter::once(&verts[v].parent)
                        .chain(&verts[v].children)
                        .filter_map(|e| match e {
                            TreeEdge::Split(s) => Some(*s + 1),
                            TreeEdge::Leaf(_) => None,
                        })
                        .max()
                        .unwrap_or(0);
                    last == m
                })
                .collect()
        })
        .collect();
    let label = |assigned: &[Partition], v: usize, e: TreeEdge| -> Partition {
        match e {
            TreeEdge::Leaf(t) => shape[t - 1].clone(),
            TreeEdge::Split(s) if e == verts[v].parent => assigned[s].complement(),
            TreeEdge::Split(s) => assigned[s].clone(),
        }
    };
    let weight = |assigned: &[Partition], v: usize| -> u64 {
        let labels: Vec<Partition> =
            std::iter::once(&verts[v].parent).chain(&verts[v].children).map(|&e| label(assigned, v, e)).collect();
        if labels.iter().map(Partition::size).sum::<usize>() != area {
            return 0;
        }
        lr_coefficient(&box_, &labels).unwrap_or(0)
    };
    let mut out = Vec::new();
    let mut assigned: Vec<Partition> = Vec::with_capacity(k);
    let mut weights: Vec<u64> = Vec::with_capacity(k + 1);
    let w0: u64 = ready[0].iter().map(|&v| weight(&assigned, v)).product();
    if w0 == 0 {
        return Ok(out);
    }
    weights.push(w0);
    descend(&options, &ready, &weight, &mut assigned, &mut weights, &mut |assigned, w| {
        let mut values = BTreeMap::new();
        for (v, vert) in verts.iter().enumerate() {
            for &e in std::iter::once(&vert.parent).chain(&vert.children) {
                values.insert((v, e), label(assigned, v, e));
            }
        }
        out.push((NodeLabeling { values }, w));
    });
    Ok(out)
}

fn descend(
    options: &[Vec<Partition>],
    ready: &[Vec<usize>],
    weight: &impl Fn(&[Partition], usize) -> u64,
    assigned: &mut Vec<Partition>,
    weights: &mut Vec<u64>,
    emit: &mut impl FnMut(&[Partition], u64),
) {
    let m = assigned.len();
    if m == options.len() {
        emit(assigned, *weights.last().unwrap());
        return;
    }
    for mu in &options[m] {
        assigned.push(mu.clone());
        let w: u64 = ready[m + 1].iter().map(|&v| weight(assigned, v)).product();
        if w > 0 {
            weights.push(weights.last().unwrap() * w);
            descend(options, ready, weight, assigned, weights, emit);
            weights.pop();
        }
        assigned.pop();
    }
}
