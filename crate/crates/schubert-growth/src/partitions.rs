//! Partitions in a `d × (n−d)` box, the subset bijection `I(λ)`, complements,
//! and brute-force Littlewood-Richardson coefficients.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("frame needs 1 <= d < n, got d={d}, n={n}")]
    BadFrame { d: usize, n: usize },
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("parts {parts:?} do not fit in the {rows}x{cols} box")]
    OutOfBox { parts: Vec<usize>, rows: usize, cols: usize },
    #[error("frame mismatch: {0} vs {1}")]
    FrameMismatch(BoxFrame, BoxFrame),
    #[error("{set:?} is not a {d}-subset of [1,{n}]")]
    BadIndexSet { set: Vec<usize>, d: usize, n: usize },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
}

/// The ambient `(d, n)`: partitions have at most `d` rows and `n−d` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxFrame {
    pub d: usize,
    pub n: usize,
}

impl BoxFrame {
    pub fn new(d: usize, n: usize) -> Result<Self, PartitionError> {
        if d == 0 || d >= n {
            return Err(PartitionError::BadFrame { d, n });
        }
        Ok(BoxFrame { d, n })
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.n - self.d
    }

    /// `d(n−d)`, the number of cells of the rectangle.
    pub fn area(&self) -> usize {
        self.d * (self.n - self.d)
    }

    pub fn empty(&self) -> Partition {
        Partition { frame: *self, parts: vec![0; self.d] }
    }

    pub fn single_box(&self) -> Partition {
        let mut parts = vec![0; self.d];
        parts[0] = 1;
        Partition { frame: *self, parts }
    }

    pub fn rectangle(&self) -> Partition {
        Partition { frame: *self, parts: vec![self.cols(); self.d] }
    }

    pub fn partition(&self, parts: &[usize]) -> Result<Partition, PartitionError> {
        Partition::new(*self, parts)
    }

    /// All of `Λ(d,n)`, sorted by size and then lexicographically.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.d];
        self.fill_rows(0, self.cols(), &mut cur, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }

    pub fn partitions_of_size(&self, k: usize) -> Vec<Partition> {
        self.partitions().into_iter().filter(|p| p.size() == k).collect()
    }

    fn fill_rows(&self, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == self.d {
            out.push(Partition { frame: *self, parts: cur.clone() });
            return;
        }
        for v in 0..=max {
            cur[row] = v;
            self.fill_rows(row + 1, v, cur, out);
        }
        cur[row] = 0;
    }

    /// Number of standard tableaux of the rectangle by the hook length formula
    /// `r! / (d^↓d (d+1)^↓d ⋯ (n−1)^↓d)`.
    pub fn hook_length_rectangle(&self) -> u128 {
        let mut num: u128 = (1..=self.area() as u128).product();
        for k in self.d..self.n {
            let falling: u128 = ((k + 1 - self.d)..=k).map(|x| x as u128).product();
            num /= falling;
        }
        num
    }
}

impl fmt::Display for BoxFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d, self.n)
    }
}

/// A partition stored densely with `d` parts (trailing zeros kept), so
/// `(2,1)` and `(2,1,0)` compare equal inside a frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    frame: BoxFrame,
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(frame: BoxFrame, parts: &[usize]) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts.to_vec()));
        }
        let nonzero = parts.iter().take_while(|&&p| p > 0).count();
        if nonzero > frame.d || parts.first().copied().unwrap_or(0) > frame.cols() {
            return Err(PartitionError::OutOfBox { parts: parts.to_vec(), rows: frame.d, cols: frame.cols() });
        }
        let mut dense = vec![0; frame.d];
        dense[..nonzero].copy_from_slice(&parts[..nonzero]);
        Ok(Partition { frame, parts: dense })
    }

    pub fn frame(&self) -> BoxFrame {
        self.frame
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts[..self.length()]
    }

    /// All `d` parts including trailing zeros.
    pub fn dense(&self) -> &[usize] {
        &self.parts
    }

    /// Part in 0-based row `k` (0 past the last row).
    pub fn row(&self, k: usize) -> usize {
        self.parts.get(k).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts[0] == 0
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.iter().all(|&p| p == self.frame.cols())
    }

    /// `self ⊇ other` cellwise.
    pub fn contains(&self, other: &Partition) -> bool {
        self.frame == other.frame && self.parts.iter().zip(&other.parts).all(|(a, b)| a >= b)
    }

    /// `λ^C = (n−d−λ_d, …, n−d−λ₁)`.
    pub fn complement(&self) -> Partition {
        let c = self.frame.cols();
        let parts = self.parts.iter().rev().map(|&p| c - p).collect();
        Partition { frame: self.frame, parts }
    }

    /// `I(λ) = {λ_d+1, λ_{d−1}+2, …, λ₁+d}`, ascending.
    pub fn index_set(&self) -> Vec<usize> {
        let d = self.frame.d;
        (1..=d).map(|k| self.parts[d - k] + k).collect()
    }

    pub fn from_index_set(frame: BoxFrame, set: &[usize]) -> Result<Partition, PartitionError> {
        let bad = || PartitionError::BadIndexSet { set: set.to_vec(), d: frame.d, n: frame.n };
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        if s.len() != frame.d || s.iter().any(|&x| x == 0 || x > frame.n) {
            return Err(bad());
        }
        let d = frame.d;
        let parts = (0..d).map(|row| s[d - 1 - row] - (d - row)).collect();
        Ok(Partition { frame, parts })
    }

    /// Partitions obtained by adding one box, ordered by the row of the box.
    pub fn covers(&self) -> Vec<Partition> {
        (0..self.frame.d).filter_map(|k| self.add_box(k)).collect()
    }

    /// Partitions obtained by removing one box, ordered by the row of the box.
    pub fn cocovers(&self) -> Vec<Partition> {
        (0..self.frame.d).filter_map(|k| self.remove_box(k)).collect()
    }

    pub fn add_box(&self, row: usize) -> Option<Partition> {
        let p = self.row(row);
        if row >= self.frame.d || p >= self.frame.cols() || (row > 0 && self.parts[row - 1] == p) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] += 1;
        Some(Partition { frame: self.frame, parts })
    }

    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let p = self.row(row);
        if p == 0 || self.row(row + 1) == p {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Some(Partition { frame: self.frame, parts })
    }

    /// The 0-based `(row, column)` of the box of `larger / self`, if
    /// `larger` covers `self`.
    pub fn added_cell(&self, larger: &Partition) -> Option<(usize, usize)> {
        if !larger.contains(self) || larger.size() != self.size() + 1 {
            return None;
        }
        let row = (0..self.frame.d).find(|&k| larger.parts[k] != self.parts[k])?;
        Some((row, self.parts[row]))
    }

    /// All `κ` with `self ⊂ κ ⊆ top` and `|κ| = |self| + 1`.
    pub fn intermediates(&self, top: &Partition) -> Vec<Partition> {
        self.covers().into_iter().filter(|k| top.contains(k)).collect()
    }

    /// Figure-style rendering: parts concatenated as digits, e.g. `21` or `00`.
    pub fn compact(&self) -> String {
        if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

pub(crate) fn same_frame(ps: &[&Partition]) -> Result<BoxFrame, PartitionError> {
    let f = ps[0].frame;
    for p in ps {
        if p.frame != f {
            return Err(PartitionError::FrameMismatch(f, p.frame));
        }
    }
    Ok(f)
}

/// Two-factor coefficient `c^ν_{μλ}`: the number of Littlewood-Richardson
/// tableaux of shape `ν/μ` and content `λ`, by brute force over chains of
/// horizontal strips followed by the lattice-word test.
pub fn lr_two(outer: &Partition, inner: &Partition, factor: &Partition) -> u64 {
    if outer.frame != inner.frame
        || outer.frame != factor.frame
        || !outer.contains(inner)
        || outer.size() != inner.size() + factor.size()
    {
        return 0;
    }
    let frame = outer.frame;
    let mut fill = vec![vec![0usize; frame.cols()]; frame.d];
    let mut count = 0;
    strip_fill(outer, inner, factor.parts(), 0, &mut fill, &mut count);
    count
}

fn strip_fill(
    outer: &Partition,
    cur: &Partition,
    content: &[usize],
    letter: usize,
    fill: &mut Vec<Vec<usize>>,
    count: &mut u64,
) {
    if letter == content.len() {
        if cur == outer && is_lattice(fill) {
            *count += 1;
        }
        return;
    }
    let mut strips = Vec::new();
    let mut next = cur.parts.clone();
    horizontal_strips(outer, cur, 0, content[letter], &mut next, &mut strips);
    for s in strips {
        for row in 0..cur.frame.d {
            fill[row][cur.parts[row]..s[row]].fill(letter + 1);
        }
        let p = Partition { frame: cur.frame, parts: s.clone() };
        strip_fill(outer, &p, content, letter + 1, fill, count);
        for row in 0..cur.frame.d {
            fill[row][cur.parts[row]..s[row]].fill(0);
        }
    }
}

fn horizontal_strips(
    outer: &Partition,
    cur: &Partition,
    row: usize,
    remaining: usize,
    next: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let d = cur.frame.d;
    if row == d {
        if remaining == 0 {
            out.push(next.clone());
        }
        return;
    }
    let lo = cur.parts[row];
    let mut hi = outer.parts[row];
    if row > 0 {
        hi = hi.min(cur.parts[row - 1]);
    }
    for v in lo..=hi.max(lo) {
        if v - lo > remaining {
            break;
        }
        next[row] = v;
        horizontal_strips(outer, cur, row + 1, remaining - (v - lo), next, out);
    }
    next[row] = cur.parts[row];
}

fn is_lattice(fill: &[Vec<usize>]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for row in fill {
        for &x in row.iter().rev() {
            if x == 0 {
                continue;
            }
            if seen.len() < x {
                seen.resize(x, 0);
            }
            seen[x - 1] += 1;
            if x > 1 && seen[x - 1] > seen[x - 2] {
                return false;
            }
        }
    }
    true
}

/// Multi-factor coefficient `c^{target}_{f₁⋯f_k}`, summing
/// `∏ c^{μ_i}_{μ_{i−1} f_i}` over chains `∅ = μ₀ ⊆ ⋯ ⊆ μ_k = target`.
/// Size mismatch gives 0.
pub fn lr_coefficient(target: &Partition, factors: &[Partition]) -> Result<u64, PartitionError> {
    let mut all: Vec<&Partition> = vec![target];
    all.extend(factors.iter());
    let frame = same_frame(&all)?;
    if factors.iter().map(Partition::size).sum::<usize>() != target.size() {
        return Ok(0);
    }
    let mut memo: HashMap<(Partition, usize), u64> = HashMap::new();
    let mut two: HashMap<(Partition, Partition, usize), u64> = HashMap::new();
    Ok(chain_sum(frame, target, factors, factors.len(), &mut memo, &mut two))
}

fn chain_sum(
    frame: BoxFrame,
    target: &Partition,
    factors: &[Partition],
    k: usize,
    memo: &mut HashMap<(Partition, usize), u64>,
    two: &mut HashMap<(Partition, Partition, usize), u64>,
) -> u64 {
    if k == 0 {
        return u64::from(target.is_empty());
    }
    if let Some(&v) = memo.get(&(target.clone(), k)) {
        return v;
    }
    let f = &factors[k - 1];
    let mut total = 0;
    if target.size() >= f.size() {
        for mu in frame.partitions_of_size(target.size() - f.size()) {
            if !target.contains(&mu) {
                continue;
            }
            let c = *two.entry((mu.clone(), target.clone(), k - 1)).or_insert_with(|| lr_two(target, &mu, f));
            if c == 0 {
                continue;
            }
            total += c * chain_sum(frame, &mu, factors, k - 1, memo, two);
        }
    }
    memo.insert((target.clone(), k), total);
    total
}

/// Number of standard skew tableaux of shape `outer/inner`.
pub fn syt_count(outer: &Partition, inner: &Partition) -> Result<u64, PartitionError> {
    same_frame(&[outer, inner])?;
    if !outer.contains(inner) {
        return Err(PartitionError::NotContained { inner: inner.clone(), outer: outer.clone() });
    }
    let mut memo = HashMap::new();
    Ok(count_paths(inner, outer, &mut memo))
}

fn count_paths(cur: &Partition, outer: &Partition, memo: &mut HashMap<Partition, u64>) -> u64 {
    if cur == outer {
        return 1;
    }
    if let Some(&v) = memo.get(cur) {
        return v;
    }
    let v = cur.intermediates(outer).iter().map(|k| count_paths(k, outer, memo)).sum();
    memo.insert(cur.clone(), v);
    v
}
