//! Cylindrical growth diagrams of dual-equivalence classes (decgds):
//! completion from a first row, restriction of ordinary diagrams, lifting,
//! validation and enumeration.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cylgrowth::{cgd_from_path, CylError, CylGrowthDiagram, PathThroughI};
use crate::partitions::{same_frame, BoxFrame, Partition, PartitionError};
use crate::tableaux::{dual_classes, shuffle_classes, ChainTableau, DualClass, TableauError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecgdError {
    #[error("shape sizes sum to {got}, but Σ|λᵢ| = d(n−d) requires {area}")]
    SizeMismatch { got: usize, area: usize },
    #[error("a decgd needs at least 3 conditions, got {0}")]
    TooFewConditions(usize),
    #[error("first row must run from the empty partition to the rectangle")]
    NotAnchored,
    #[error("first row has {chain} partitions but {classes} classes")]
    LengthMismatch { chain: usize, classes: usize },
    #[error("class {index} has shape {found}, expected {want}")]
    ClassShape { index: usize, found: String, want: String },
    #[error("representative {index} is not in the class it lifts")]
    NotInClass { index: usize },
    #[error("recursion did not close up periodically")]
    NotPeriodic,
    #[error("invalid decgd: {0}")]
    Invalid(String),
    #[error(transparent)]
    Cyl(#[from] CylError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A decgd: `γ_{kℓ}` on `0 ≤ k < r`, `k ≤ ℓ ≤ k+r`, with classes `a(k,ℓ)` of
/// shape `γ_{k(ℓ+1)}/γ_{kℓ}` and `b(k,ℓ)` of shape `γ_{(k−1)ℓ}/γ_{kℓ}` for
/// `ℓ − k < r`. All indices are periodic under `(k,ℓ) ↦ (k+r, ℓ+r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DecgdRepr", into = "DecgdRepr")]
pub struct Decgd {
    frame: BoxFrame,
    r: usize,
    shape: Vec<Partition>,
    gamma: Vec<Vec<Partition>>,
    a: Vec<Vec<DualClass>>,
    b: Vec<Vec<DualClass>>,
}

type Chains = Vec<Vec<Vec<usize>>>;

#[derive(Serialize, Deserialize)]
struct DecgdRepr {
    frame: BoxFrame,
    r: usize,
    shape: Vec<Vec<usize>>,
    gamma: Vec<Vec<Vec<usize>>>,
    a: Vec<Chains>,
    b: Vec<Chains>,
}

fn class_chains(rows: &[Vec<DualClass>]) -> Vec<Chains> {
    rows.iter()
        .map(|row| {
            row.iter().map(|c| c.representative().chain().iter().map(|p| p.parts().to_vec()).collect()).collect()
        })
        .collect()
}

impl From<Decgd> for DecgdRepr {
    fn from(d: Decgd) -> Self {
        DecgdRepr {
            frame: d.frame,
            r: d.r,
            shape: d.shape.iter().map(|p| p.parts().to_vec()).collect(),
            gamma: d.gamma.iter().map(|row| row.iter().map(|p| p.parts().to_vec()).collect()).collect(),
            a: class_chains(&d.a),
            b: class_chains(&d.b),
        }
    }
}

impl TryFrom<DecgdRepr> for Decgd {
    type Error = DecgdError;

    fn try_from(x: DecgdRepr) -> Result<Self, DecgdError> {
        let frame = BoxFrame::new(x.frame.d, x.frame.n)?;
        let part = |p: &Vec<usize>| Partition::new(frame, p);
        let classes = |rows: &Vec<Chains>| -> Result<Vec<Vec<DualClass>>, DecgdError> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|c| Ok(DualClass::of(&ChainTableau::from_parts(frame, c)?)))
                        .collect::<Result<Vec<_>, DecgdError>>()
                })
                .collect()
        };
        let d = Decgd {
            frame,
            r: x.r,
            shape: x.shape.iter().map(part).collect::<Result<_, _>>()?,
            gamma: x
                .gamma
                .iter()
                .map(|row| row.iter().map(part).collect::<Result<Vec<_>, _>>())
                .collect::<Result<_, _>>()?,
            a: classes(&x.a)?,
            b: classes(&x.b)?,
        };
        let r = d.r;
        let layout = d.shape.len() == r
            && d.gamma.len() == r
            && d.gamma.iter().all(|row| row.len() == r + 1)
            && [&d.a, &d.b].iter().all(|m| m.len() == r && m.iter().all(|row| row.len() == r));
        if !layout {
            return Err(DecgdError::Invalid("layout does not match r".into()));
        }
        Ok(d)
    }
}

impl Decgd {
    pub fn frame(&self) -> BoxFrame {
        self.frame
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `(γ_{01}, γ_{12}, …, γ_{(r−1)r})`.
    pub fn shape(&self) -> &[Partition] {
        &self.shape
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.shape.iter().map(Partition::size).collect()
    }

    fn slot(&self, k: i64, l: i64, span: i64) -> (usize, usize) {
        assert!(l >= k && l - k <= span, "({k},{l}) is outside the index set");
        (k.rem_euclid(self.r as i64) as usize, (l - k) as usize)
    }

    pub fn gamma(&self, k: i64, l: i64) -> &Partition {
        let (x, y) = self.slot(k, l, self.r as i64);
        &self.gamma[x][y]
    }

    pub fn a(&self, k: i64, l: i64) -> &DualClass {
        let (x, y) = self.slot(k, l, self.r as i64 - 1);
        &self.a[x][y]
    }

    pub fn b(&self, k: i64, l: i64) -> &DualClass {
        let (x, y) = self.slot(k, l, self.r as i64 - 1);
        &self.b[x][y]
    }

    /// Builds a decgd from explicit periodic data, without validation.
    pub(crate) fn from_fn(
        frame: BoxFrame,
        r: usize,
        gamma: impl Fn(i64, i64) -> Partition,
        a: impl Fn(i64, i64) -> DualClass,
        b: impl Fn(i64, i64) -> DualClass,
    ) -> Decgd {
        let ri = r as i64;
        let gamma: Vec<Vec<Partition>> = (0..ri).map(|k| (k..=k + ri).map(|l| gamma(k, l)).collect()).collect();
        let a = (0..ri).map(|k| (k..k + ri).map(|l| a(k, l)).collect()).collect();
        let b = (0..ri).map(|k| (k..k + ri).map(|l| b(k, l)).collect()).collect();
        let shape = (0..r).map(|k| gamma[k][1].clone()).collect();
        Decgd { frame, r, shape, gamma, a, b }
    }
}

/// The unique class of shape `▭/ν`, which rectifies to `ν^C`.
fn cap_class(nu: &Partition) -> DualClass {
    let t = ChainTableau::all(&nu.frame().rectangle(), nu).into_iter().next().expect("ν lies in the box");
    DualClass::of(&t)
}

/// The unique decgd whose row 0 carries `mu_chain` and the classes
/// `a(0,ℓ) = classes[ℓ]`, completed row by row using
/// `shuffle(b(k,ℓ), a(k−1,ℓ)) = (a(k,ℓ), b(k,ℓ+1))`.
pub fn decgd_from_first_row(mu_chain: &[Partition], classes: &[DualClass]) -> Result<Decgd, DecgdError> {
    let r = classes.len();
    if mu_chain.len() != r + 1 {
        return Err(DecgdError::LengthMismatch { chain: mu_chain.len(), classes: r });
    }
    let frame = same_frame(&mu_chain.iter().collect::<Vec<_>>())?;
    if !mu_chain[0].is_empty() || !mu_chain[r].is_rectangle() {
        return Err(DecgdError::NotAnchored);
    }
    for (j, c) in classes.iter().enumerate() {
        if c.inner() != &mu_chain[j] || c.outer() != &mu_chain[j + 1] {
            return Err(DecgdError::ClassShape {
                index: j,
                found: format!("{} -> {}", c.inner(), c.outer()),
                want: format!("{} -> {}", mu_chain[j], mu_chain[j + 1]),
            });
        }
    }
    let mut a_rows: Vec<Vec<DualClass>> = vec![classes.to_vec()];
    let mut b_rows: Vec<Vec<DualClass>> = Vec::new();
    for _k in 1..=r {
        let prev = a_rows.last().expect("row 0 present");
        let mut a_row = Vec::with_capacity(r);
        let mut b_row = Vec::with_capacity(r);
        b_row.push(DualClass::straight(prev[0].outer()));
        for t in 0..r - 1 {
            let (a_new, b_next) = shuffle_classes(&b_row[t], &prev[t + 1])?;
            a_row.push(a_new);
            b_row.push(b_next);
        }
        let last_inner = a_row.last().map(|c| c.outer().clone()).unwrap_or_else(|| frame.empty());
        a_row.push(cap_class(&last_inner));
        a_rows.push(a_row);
        b_rows.push(b_row);
    }
    if a_rows[r] != a_rows[0] {
        return Err(DecgdError::NotPeriodic);
    }
    a_rows.pop();
    b_rows.rotate_right(1);
    let gamma_of = |k: usize, t: usize| -> Partition {
        if t == r {
            frame.rectangle()
        } else {
            a_rows[k][t].inner().clone()
        }
    };
    let gamma: Vec<Vec<Partition>> = (0..r).map(|k| (0..=r).map(|t| gamma_of(k, t)).collect()).collect();
    let shape = (0..r).map(|k| gamma[k][1].clone()).collect();
    Ok(Decgd { frame, r, shape, gamma, a: a_rows, b: b_rows })
}

/// Checks anchoring, class shapes, canonical representatives, the shuffle
/// condition on every cell and the recorded shape.
pub fn decgd_validate(dg: &Decgd) -> Result<(), DecgdError> {
    let r = dg.r as i64;
    let bad = |s: String| Err(DecgdError::Invalid(s));
    for k in 0..r {
        if !dg.gamma(k, k).is_empty() || !dg.gamma(k, k + r).is_rectangle() {
            return bad(format!("row {k} is not anchored"));
        }
        if &dg.shape[k as usize] != dg.gamma(k, k + 1) {
            return bad(format!("shape entry {k} disagrees with γ"));
        }
        for l in k..k + r {
            let a = dg.a(k, l);
            if a.inner() != dg.gamma(k, l) || a.outer() != dg.gamma(k, l + 1) {
                return bad(format!("a({k},{l}) has the wrong shape"));
            }
            let b = dg.b(k, l);
            if b.inner() != dg.gamma(k, l) || b.outer() != dg.gamma(k - 1, l) {
                return bad(format!("b({k},{l}) has the wrong shape"));
            }
            if &DualClass::of(a.representative()) != a || &DualClass::of(b.representative()) != b {
                return bad(format!("class at ({k},{l}) is not held by its canonical representative"));
            }
            if l + 1 < k + r {
                let (x, y) = shuffle_classes(a, dg.b(k, l + 1))?;
                if &x != b || &y != dg.a(k - 1, l) {
                    return bad(format!("shuffle condition fails at ({k},{l})"));
                }
            }
        }
    }
    Ok(())
}

/// Partial sums of a size sequence, extended periodically: `ι(0) = offset`
/// and `ι(ℓ) − ι(ℓ−1) = sizes[(ℓ−1) mod r]`.
#[derive(Clone, Debug)]
pub struct Iota {
    prefix: Vec<i64>,
    total: i64,
    offset: i64,
}

impl Iota {
    pub fn new(sizes: &[usize], offset: i64) -> Self {
        let mut prefix = vec![0i64];
        for &s in sizes {
            prefix.push(prefix.last().unwrap() + s as i64);
        }
        let total = *prefix.last().unwrap();
        Iota { prefix, total, offset }
    }

    pub fn at(&self, m: i64) -> i64 {
        let r = (self.prefix.len() - 1) as i64;
        self.offset + m.div_euclid(r) * self.total + self.prefix[m.rem_euclid(r) as usize]
    }
}

fn check_sizes(frame: BoxFrame, sizes: &[usize]) -> Result<(), DecgdError> {
    let got: usize = sizes.iter().sum();
    if got != frame.area() {
        return Err(DecgdError::SizeMismatch { got, area: frame.area() });
    }
    if sizes.contains(&0) {
        return Err(DecgdError::Invalid("block sizes must be positive".into()));
    }
    Ok(())
}

/// Restriction of an ordinary diagram along `ι` with `ι(0) = 0`.
pub fn restrict_cgd(g: &CylGrowthDiagram, sizes: &[usize]) -> Result<Decgd, DecgdError> {
    restrict_cgd_at(g, sizes, 0)
}

/// Restriction along `ι` with `ι(0) = offset`: `γ_{kℓ} = γ̃_{ι(k)ι(ℓ)}`,
/// `a(k,ℓ)` the class of the row segment from `(ι(k),ι(ℓ))` to
/// `(ι(k),ι(ℓ+1))` and `b(k,ℓ)` the class of the column segment from
/// `(ι(k),ι(ℓ))` up to `(ι(k−1),ι(ℓ))`.
pub fn restrict_cgd_at(g: &CylGrowthDiagram, sizes: &[usize], offset: i64) -> Result<Decgd, DecgdError> {
    check_sizes(g.frame(), sizes)?;
    let iota = Iota::new(sizes, offset);
    let row_chain = |k: i64, l: i64| {
        let i = iota.at(k);
        let chain = (iota.at(l)..=iota.at(l + 1)).map(|j| g.get(i, j).clone()).collect();
        DualClass::of(&ChainTableau::new(chain).expect("diagram rows are chains"))
    };
    let col_chain = |k: i64, l: i64| {
        let j = iota.at(l);
        let chain = (iota.at(k - 1)..=iota.at(k)).rev().map(|i| g.get(i, j).clone()).collect();
        DualClass::of(&ChainTableau::new(chain).expect("diagram columns are chains"))
    };
    Ok(Decgd::from_fn(g.frame(), sizes.len(), |k, l| g.get(iota.at(k), iota.at(l)).clone(), row_chain, col_chain))
}

/// Lifts `dg` along a coarse path: each right step `(k,ℓ) → (k,ℓ+1)` takes
/// a representative of `a(k,ℓ)`, each up step `(k,ℓ) → (k−1,ℓ)` one of
/// `b(k,ℓ)`. The concatenated chain is extended to an ordinary diagram.
pub fn lift_decgd(dg: &Decgd, path: &PathThroughI, reps: &[ChainTableau]) -> Result<CylGrowthDiagram, DecgdError> {
    if reps.len() != path.len() {
        return Err(DecgdError::LengthMismatch { chain: reps.len(), classes: path.len() });
    }
    let iota = Iota::new(&dg.sizes(), 0);
    let steps = path.steps();
    let (k0, _) = steps[0];
    let mut fine = vec![(iota.at(k0), iota.at(k0))];
    let mut chain = ChainTableau::trivial(dg.frame.empty());
    for (t, w) in steps.windows(2).enumerate() {
        let ((k, l), (k2, _)) = (w[0], w[1]);
        let class = if k2 == k { dg.a(k, l) } else { dg.b(k, l) };
        if !class.contains(&reps[t]) {
            return Err(DecgdError::NotInClass { index: t });
        }
        let (i, j) = (iota.at(k), iota.at(l));
        for u in 1..=reps[t].len() as i64 {
            fine.push(if k2 == k { (i, j + u) } else { (i - u, j) });
        }
        chain = chain.concat(&reps[t])?;
    }
    let fine = PathThroughI::new(fine)?;
    Ok(cgd_from_path(&fine, &chain)?)
}

/// Lift along row 0 using canonical representatives.
pub fn lift_decgd_canonical(dg: &Decgd) -> Result<CylGrowthDiagram, DecgdError> {
    let reps: Vec<ChainTableau> = (0..dg.r as i64).map(|l| dg.a(0, l).representative().clone()).collect();
    lift_decgd(dg, &PathThroughI::row(0, dg.r), &reps)
}

/// All decgds of the given shape, one per first-row seed `(μ, classes)` with
/// `rshape(a(0,j)) = λ_{j+1}`.
pub fn decgd_enumerate(frame: BoxFrame, shape: &[Partition]) -> Result<Vec<Decgd>, DecgdError> {
    if shape.len() < 3 {
        return Err(DecgdError::TooFewConditions(shape.len()));
    }
    for p in shape {
        if p.frame() != frame {
            return Err(PartitionError::FrameMismatch(frame, p.frame()).into());
        }
    }
    let sizes: Vec<usize> = shape.iter().map(Partition::size).collect();
    let got: usize = sizes.iter().sum();
    if got != frame.area() {
        return Err(DecgdError::SizeMismatch { got, area: frame.area() });
    }
    let mut seeds = Vec::new();
    let mut chain = vec![frame.empty()];
    let mut classes = Vec::new();
    first_rows(frame, shape, &mut chain, &mut classes, &mut seeds);
    seeds.par_iter().map(|(mu, cl)| decgd_from_first_row(mu, cl)).collect()
}

type Seed = (Vec<Partition>, Vec<DualClass>);

fn first_rows(
    frame: BoxFrame,
    shape: &[Partition],
    chain: &mut Vec<Partition>,
    classes: &mut Vec<DualClass>,
    out: &mut Vec<Seed>,
) {
    let j = classes.len();
    if j == shape.len() {
        out.push((chain.clone(), classes.clone()));
        return;
    }
    let cur = chain.last().expect("nonempty").clone();
    let next_size = cur.size() + shape[j].size();
    for nu in frame.partitions_of_size(next_size) {
        if !nu.contains(&cur) || (j + 1 == shape.len() && !nu.is_rectangle()) {
            continue;
        }
        for c in dual_classes(&nu, &cur, &shape[j]) {
            chain.push(nu.clone());
            classes.push(c);
            first_rows(frame, shape, chain, classes, out);
            classes.pop();
            chain.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylgrowth::{cgd_enumerate, is_valid};
    use crate::partitions::lr_coefficient;

    fn fr(d: usize, n: usize) -> BoxFrame {
        BoxFrame::new(d, n).unwrap()
    }

    fn p(f: BoxFrame, parts: &[usize]) -> Partition {
        Partition::new(f, parts).unwrap()
    }

    fn boxes(f: BoxFrame, r: usize) -> Vec<Partition> {
        vec![f.single_box(); r]
    }

    #[test]
    fn first_row_of_single_boxes() {
        let f = fr(2, 4);
        let mu: Vec<Partition> = [&[][..], &[1], &[2], &[2, 1], &[2, 2]].iter().map(|x| p(f, x)).collect();
        let classes: Vec<DualClass> =
            mu.windows(2).map(|w| DualClass::of(&ChainTableau::new(w.to_vec()).unwrap())).collect();
        let dg = decgd_from_first_row(&mu, &classes).unwrap();
        decgd_validate(&dg).unwrap();
        assert_eq!(dg.shape(), &boxes(f, 4)[..]);
    }

    #[test]
    fn first_row_rejects_bad_input() {
        let f = fr(2, 4);
        let mu = vec![f.empty(), p(f, &[2]), f.rectangle()];
        let c0 = DualClass::straight(&p(f, &[2]));
        assert!(decgd_from_first_row(&mu, std::slice::from_ref(&c0)).is_err());
        let c1 = DualClass::of(&ChainTableau::all(&f.rectangle(), &p(f, &[1])).remove(0));
        assert!(decgd_from_first_row(&mu, &[c0, c1]).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let f = fr(2, 4);
        assert_eq!(decgd_enumerate(f, &boxes(f, 4)).unwrap().len(), 2);
        let b = f.single_box();
        assert!(decgd_enumerate(f, &[f.rectangle(), b.clone(), b.clone()]).is_err());
        let zero = decgd_enumerate(f, &[p(f, &[2]), p(f, &[1]), p(f, &[1])]).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(decgd_enumerate(f, &[p(f, &[1, 1]), b.clone(), b.clone()]).unwrap().len(), 1);
        assert!(decgd_enumerate(f, &[b.clone(), b]).is_err());
    }

    #[test]
    fn counts_match_lr_in_frame_2_4() {
        let f = fr(2, 4);
        let parts: Vec<Partition> = f.partitions().into_iter().filter(|x| !x.is_empty()).collect();
        for r in [3usize, 4] {
            let mut idx = vec![0usize; r];
            loop {
                let shape: Vec<Partition> = idx.iter().map(|&i| parts[i].clone()).collect();
                if shape.iter().map(Partition::size).sum::<usize>() == f.area() {
                    let found = decgd_enumerate(f, &shape).unwrap();
                    let lr = lr_coefficient(&f.rectangle(), &shape).unwrap();
                    assert_eq!(found.len() as u64, lr, "shape {shape:?}");
                    for dg in &found {
                        decgd_validate(dg).unwrap();
                    }
                }
                let mut k = 0;
                while k < r {
                    idx[k] += 1;
                    if idx[k] < parts.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == r {
                    break;
                }
            }
        }
    }

    #[test]
    fn unit_restriction_matches_enumeration() {
        let f = fr(2, 5);
        let mut restricted: Vec<Decgd> = cgd_enumerate(f).iter().map(|g| restrict_cgd(g, &[1; 6]).unwrap()).collect();
        let mut listed = decgd_enumerate(f, &boxes(f, 6)).unwrap();
        restricted.sort_by_key(|d| format!("{d:?}"));
        listed.sort_by_key(|d| format!("{d:?}"));
        assert_eq!(restricted, listed);
    }

    #[test]
    fn restriction_with_blocks_of_two() {
        let f = fr(2, 4);
        let mut found: Vec<Decgd> = cgd_enumerate(f).iter().map(|g| restrict_cgd(g, &[2, 2]).unwrap()).collect();
        for dg in &found {
            decgd_validate(dg).unwrap();
        }
        found.sort_by_key(|d| format!("{d:?}"));
        found.dedup();
        let shapes: Vec<Vec<Partition>> = found.iter().map(|d| d.shape().to_vec()).collect();
        assert!(shapes.contains(&vec![p(f, &[2]), p(f, &[2])]));
        assert!(shapes.contains(&vec![p(f, &[1, 1]), p(f, &[1, 1])]));
        assert_eq!(found.len(), 2);
    }

    #[test]
    fn restrict_then_lift_round_trips() {
        let f = fr(2, 5);
        for g in cgd_enumerate(f) {
            for sizes in [vec![2, 2, 2], vec![1, 2, 3], vec![3, 1, 1, 1]] {
                let dg = restrict_cgd(&g, &sizes).unwrap();
                decgd_validate(&dg).unwrap();
                let iota = Iota::new(&sizes, 0);
                let reps: Vec<ChainTableau> = (0..sizes.len() as i64)
                    .map(|l| {
                        let chain = (iota.at(l)..=iota.at(l + 1)).map(|j| g.get(0, j).clone()).collect();
                        ChainTableau::new(chain).unwrap()
                    })
                    .collect();
                let lifted = lift_decgd(&dg, &PathThroughI::row(0, sizes.len()), &reps).unwrap();
                assert_eq!(lifted, g);
                let canon = lift_decgd_canonical(&dg).unwrap();
                assert!(is_valid(&canon));
                assert_eq!(restrict_cgd(&canon, &sizes).unwrap(), dg);
            }
        }
    }

    #[test]
    fn lift_rejects_foreign_representatives() {
        let f = fr(2, 4);
        let g = cgd_enumerate(f).remove(0);
        let dg = restrict_cgd(&g, &[1, 1, 1, 1]).unwrap();
        let other = cgd_enumerate(f).remove(1);
        let reps: Vec<ChainTableau> = (0..4)
            .map(|l| ChainTableau::new(vec![other.get(0, l).clone(), other.get(0, l + 1).clone()]).unwrap())
            .collect();
        assert!(lift_decgd(&dg, &PathThroughI::row(0, 4), &reps).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = fr(2, 4);
        let b = f.single_box();
        let dg = decgd_enumerate(f, &[p(f, &[1, 1]), b.clone(), b]).unwrap().remove(0);
        let s = serde_json::to_string(&dg).unwrap();
        let back: Decgd = serde_json::from_str(&s).unwrap();
        assert_eq!(back, dg);
    }
}
