//! Skew standard tableaux as chains of partitions, the growth-diagram local
//! rule, shuffling, rectification and dual-equivalence classes.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partitions::{BoxFrame, Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("a chain needs at least one partition")]
    Empty,
    #[error("step {at} of the chain does not add exactly one box: {from} -> {to}")]
    NotChain { at: usize, from: Partition, to: Partition },
    #[error("chains are not consecutive: {0} != {1}")]
    NotConsecutive(Partition, Partition),
    #[error("no growth square completes bottom {bottom}, middle {middle}, top {top}")]
    Inconsistent { bottom: Partition, middle: Partition, top: Partition },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A standard skew tableau: a chain of partitions adding one box per step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainTableau {
    chain: Vec<Partition>,
}

impl ChainTableau {
    pub fn new(chain: Vec<Partition>) -> Result<Self, TableauError> {
        if chain.is_empty() {
            return Err(TableauError::Empty);
        }
        for (at, w) in chain.windows(2).enumerate() {
            if w[0].added_cell(&w[1]).is_none() {
                return Err(TableauError::NotChain { at, from: w[0].clone(), to: w[1].clone() });
            }
        }
        Ok(ChainTableau { chain })
    }

    pub fn from_parts(frame: BoxFrame, parts: &[Vec<usize>]) -> Result<Self, TableauError> {
        let chain = parts.iter().map(|p| Partition::new(frame, p)).collect::<Result<Vec<_>, _>>()?;
        Self::new(chain)
    }

    /// The empty tableau sitting at `p`.
    pub fn trivial(p: Partition) -> Self {
        ChainTableau { chain: vec![p] }
    }

    /// The row-reading superstandard tableau `S_λ`: row one first, then row
    /// two, and so on.
    pub fn superstandard(shape: &Partition) -> Self {
        let frame = shape.frame();
        let mut cur = frame.empty();
        let mut chain = vec![cur.clone()];
        for row in 0..frame.d {
            for _ in 0..shape.row(row) {
                cur = cur.add_box(row).expect("superstandard filling stays a partition");
                chain.push(cur.clone());
            }
        }
        ChainTableau { chain }
    }

    /// Every standard tableau of shape `outer/inner`, in lexicographic order
    /// of chains.
    pub fn all(outer: &Partition, inner: &Partition) -> Vec<ChainTableau> {
        let mut out = Vec::new();
        if outer.contains(inner) {
            let mut cur = vec![inner.clone()];
            extend_all(outer, &mut cur, &mut out);
        }
        out.sort();
        out
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn into_chain(self) -> Vec<Partition> {
        self.chain
    }

    pub fn frame(&self) -> BoxFrame {
        self.chain[0].frame()
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &Partition {
        self.chain.last().expect("chains are nonempty")
    }

    /// Number of boxes.
    pub fn len(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.chain.len() == 1
    }

    pub fn is_straight(&self) -> bool {
        self.inner().is_empty()
    }

    pub fn same_shape(&self, other: &ChainTableau) -> bool {
        self.inner() == other.inner() && self.outer() == other.outer()
    }

    /// `self` followed by `next`.
    pub fn concat(&self, next: &ChainTableau) -> Result<ChainTableau, TableauError> {
        if self.outer() != next.inner() {
            return Err(TableauError::NotConsecutive(self.outer().clone(), next.inner().clone()));
        }
        let mut chain = self.chain.clone();
        chain.extend(next.chain[1..].iter().cloned());
        Ok(ChainTableau { chain })
    }

    /// Entries in 0-based cells, 1-based labels; 0 marks cells outside the skew shape.
    pub fn to_grid(&self) -> Vec<Vec<usize>> {
        let frame = self.frame();
        let mut grid = vec![vec![0; frame.cols()]; frame.d];
        for (k, w) in self.chain.windows(2).enumerate() {
            let (r, c) = w[0].added_cell(&w[1]).expect("validated chain");
            grid[r][c] = k + 1;
        }
        grid
    }
}

fn extend_all(outer: &Partition, cur: &mut Vec<Partition>, out: &mut Vec<ChainTableau>) {
    let last = cur.last().expect("nonempty").clone();
    if &last == outer {
        out.push(ChainTableau { chain: cur.clone() });
        return;
    }
    for k in last.intermediates(outer) {
        cur.push(k);
        extend_all(outer, cur, out);
        cur.pop();
    }
}

impl Serialize for ChainTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.chain.serialize(s)
    }
}

/// Completes a unit square from its bottom corner, one middle corner and its
/// top corner. When `top/bottom` is a domino the two middles coincide;
/// otherwise the missing middle is the other intermediate partition.
pub fn local_rule(bottom: &Partition, middle: &Partition, top: &Partition) -> Result<Partition, TableauError> {
    let bad = || TableauError::Inconsistent { bottom: bottom.clone(), middle: middle.clone(), top: top.clone() };
    if bottom.added_cell(middle).is_none() || middle.added_cell(top).is_none() {
        return Err(bad());
    }
    let mids = bottom.intermediates(top);
    match mids.len() {
        1 => Ok(mids[0].clone()),
        2 => Ok(if &mids[0] == middle { mids[1].clone() } else { mids[0].clone() }),
        _ => Err(bad()),
    }
}

/// A rectangular growth diagram `γ: [−h,0] × [0,w] → Λ`, stored as
/// `grid[a][b] = γ_{−a,b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRect {
    grid: Vec<Vec<Partition>>,
}

impl GrowthRect {
    /// Fills the rectangle whose bottom row is `bottom` and whose right
    /// column, read upward, is `right`.
    pub fn fill(bottom: &ChainTableau, right: &ChainTableau) -> Result<Self, TableauError> {
        if bottom.outer() != right.inner() {
            return Err(TableauError::NotConsecutive(bottom.outer().clone(), right.inner().clone()));
        }
        let w = bottom.len();
        let h = right.len();
        let mut grid: Vec<Vec<Partition>> = Vec::with_capacity(h + 1);
        grid.push(bottom.chain.clone());
        for a in 1..=h {
            let mut row = vec![right.chain[a].clone(); w + 1];
            for b in (0..w).rev() {
                row[b] = local_rule(&grid[a - 1][b], &grid[a - 1][b + 1], &row[b + 1])?;
            }
            grid.push(row);
        }
        Ok(GrowthRect { grid })
    }

    pub fn height(&self) -> usize {
        self.grid.len() - 1
    }

    pub fn width(&self) -> usize {
        self.grid[0].len() - 1
    }

    /// `γ_{−a,b}`.
    pub fn get(&self, a: usize, b: usize) -> &Partition {
        &self.grid[a][b]
    }

    pub fn left_column(&self) -> ChainTableau {
        ChainTableau { chain: self.grid.iter().map(|row| row[0].clone()).collect() }
    }

    pub fn top_row(&self) -> ChainTableau {
        ChainTableau { chain: self.grid[self.height()].clone() }
    }

    /// Every unit square obeys the local rule.
    pub fn is_valid(&self) -> bool {
        (1..=self.height()).all(|a| {
            (0..self.width()).all(|b| {
                local_rule(&self.grid[a - 1][b], &self.grid[a - 1][b + 1], &self.grid[a][b + 1])
                    .map(|m| m == self.grid[a][b])
                    .unwrap_or(false)
            })
        })
    }
}

/// Shuffles `(lower, upper)` to `(new_lower, new_upper)`, where `new_lower`
/// has as many boxes as `upper` and shares its inner shape with `lower`.
pub fn shuffle(lower: &ChainTableau, upper: &ChainTableau) -> Result<(ChainTableau, ChainTableau), TableauError> {
    let g = GrowthRect::fill(lower, upper)?;
    Ok((g.left_column(), g.top_row()))
}

/// The straight-shape tableau slide equivalent to `t`.
pub fn rectify(t: &ChainTableau) -> ChainTableau {
    let alpha = ChainTableau::superstandard(t.inner());
    shuffle(&alpha, t).expect("superstandard tableau ends at the inner shape").0
}

/// Shape of the rectification of `t`.
pub fn rshape(t: &ChainTableau) -> Partition {
    rectify(t).outer().clone()
}

/// The tableau dual equivalent to `t` and slide equivalent to `S_{rshape(t)}`.
pub fn canonical_rep(t: &ChainTableau) -> ChainTableau {
    let alpha = ChainTableau::superstandard(t.inner());
    let (eps2, beta) = shuffle(&alpha, t).expect("consecutive by construction");
    let s_mu = ChainTableau::superstandard(eps2.outer());
    let (_, phi) = shuffle(&s_mu, &beta).expect("consecutive by construction");
    phi
}

pub fn dual_equivalent(t1: &ChainTableau, t2: &ChainTableau) -> bool {
    t1.same_shape(t2) && canonical_rep(t1) == canonical_rep(t2)
}

/// Definitional check inside the box: same shape, every outward extension
/// shuffles to the same partner, and every inward straightening likewise.
pub fn dual_equivalent_oracle(t1: &ChainTableau, t2: &ChainTableau) -> bool {
    if !t1.same_shape(t2) {
        return false;
    }
    let frame = t1.frame();
    for pi in frame.partitions() {
        if !pi.contains(t1.outer()) {
            continue;
        }
        for eps in ChainTableau::all(&pi, t1.outer()) {
            let a = shuffle(t1, &eps).expect("consecutive");
            let b = shuffle(t2, &eps).expect("consecutive");
            if a.0 != b.0 {
                return false;
            }
        }
    }
    for kappa in frame.partitions() {
        if !t1.inner().contains(&kappa) {
            continue;
        }
        for alpha in ChainTableau::all(t1.inner(), &kappa) {
            let a = shuffle(&alpha, t1).expect("consecutive");
            let b = shuffle(&alpha, t2).expect("consecutive");
            if a.1 != b.1 {
                return false;
            }
        }
    }
    true
}

/// A dual-equivalence class, held by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualClass {
    representative: ChainTableau,
    rshape: Partition,
}

impl DualClass {
    pub fn of(t: &ChainTableau) -> Self {
        let representative = canonical_rep(t);
        let rshape = rshape(&representative);
        DualClass { representative, rshape }
    }

    /// The unique class of a straight shape.
    pub fn straight(shape: &Partition) -> Self {
        let representative = ChainTableau::superstandard(shape);
        DualClass { representative, rshape: shape.clone() }
    }

    pub fn representative(&self) -> &ChainTableau {
        &self.representative
    }

    pub fn rshape(&self) -> &Partition {
        &self.rshape
    }

    pub fn inner(&self) -> &Partition {
        self.representative.inner()
    }

    pub fn outer(&self) -> &Partition {
        self.representative.outer()
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn contains(&self, t: &ChainTableau) -> bool {
        t.same_shape(&self.representative) && canonical_rep(t) == self.representative
    }
}

impl Serialize for DualClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.representative.serialize(s)
    }
}

/// Classes in `SYT(outer/inner)` with rectification shape `rshape`.
pub fn dual_classes(outer: &Partition, inner: &Partition, rshape: &Partition) -> Vec<DualClass> {
    if outer.size() < inner.size() || outer.size() - inner.size() != rshape.size() {
        return Vec::new();
    }
    dual_classes_with_members(outer, inner).into_iter().filter(|(c, _)| c.rshape() == rshape).map(|(c, _)| c).collect()
}

/// Every class in `SYT(outer/inner)` together with its members.
pub fn dual_classes_with_members(outer: &Partition, inner: &Partition) -> Vec<(DualClass, Vec<ChainTableau>)> {
    let mut groups: BTreeMap<DualClass, Vec<ChainTableau>> = BTreeMap::new();
    for t in ChainTableau::all(outer, inner) {
        groups.entry(DualClass::of(&t)).or_default().push(t);
    }
    groups.into_iter().collect()
}

pub fn shuffle_classes(a: &DualClass, b: &DualClass) -> Result<(DualClass, DualClass), TableauError> {
    let (x, y) = shuffle(&a.representative, &b.representative)?;
    Ok((DualClass::of(&x), DualClass::of(&y)))
}
