//! Oracles written against plain part vectors, sharing no code with the
//! library.

#![allow(dead_code)]

/// All partitions with at most `d` rows and at most `m` columns, padded to
/// length `d`.
pub fn partitions_in_box(d: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == d {
            out.push(acc.clone());
            return;
        }
        for p in (0..=cap).rev() {
            acc.push(p);
            go(d, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(d, m, &mut Vec::new(), &mut out);
    out
}

pub fn contains(big: &[usize], small: &[usize]) -> bool {
    big.iter().zip(small).all(|(a, b)| a >= b)
}

/// `(d·m)! / ∏ hooks` for the `d × m` rectangle.
pub fn hook_length_rectangle(d: usize, m: usize) -> u128 {
    let n = (d * m) as u128;
    let mut num: u128 = (1..=n).product();
    for i in 0..d {
        for j in 0..m {
            let hook = (m - j - 1) + (d - i - 1) + 1;
            num /= hook as u128;
        }
    }
    num
}

/// Littlewood-Richardson tableaux of shape `ν/μ` and content `λ`: fill the
/// cells row by row, right to left, keeping rows weak, columns strict and
/// the reading word a lattice word.
pub fn lr_tableaux(nu: &[usize], mu: &[usize], lambda: &[usize]) -> u64 {
    let d = nu.len();
    let mu: Vec<usize> = (0..d).map(|i| mu.get(i).copied().unwrap_or(0)).collect();
    if !contains(nu, &mu) {
        return 0;
    }
    let lam: Vec<usize> = lambda.iter().copied().filter(|&x| x > 0).collect();
    if nu.iter().sum::<usize>() != mu.iter().sum::<usize>() + lam.iter().sum::<usize>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..d).flat_map(|i| (mu[i]..nu[i]).rev().map(move |j| (i, j))).collect();
    let width = nu.first().copied().unwrap_or(0);
    let mut grid = vec![vec![0usize; width]; d];
    let mut used = vec![0usize; lam.len() + 1];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        mu: &[usize],
        lam: &[usize],
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
    ) -> u64 {
        let Some(&(i, j)) = cells.get(k) else { return 1 };
        let mut total = 0;
        for v in 1..=lam.len() {
            if used[v] == lam[v - 1] {
                continue;
            }
            if v > 1 && used[v] + 1 > used[v - 1] {
                continue;
            }
            if j + 1 < grid[i].len() && grid[i][j + 1] != 0 && v > grid[i][j + 1] {
                continue;
            }
            if i > 0 && j >= mu[i - 1] && grid[i - 1][j] >= v {
                continue;
            }
            grid[i][j] = v;
            used[v] += 1;
            total += go(k + 1, cells, mu, lam, grid, used);
            used[v] -= 1;
            grid[i][j] = 0;
        }
        total
    }
    go(0, &cells, &mu, &lam, &mut grid, &mut used)
}

/// `c^{▭}_{λ₁⋯λ_r}` for the `d × m` rectangle, summed over chains.
pub fn lr_rectangle(d: usize, m: usize, shape: &[Vec<usize>]) -> u64 {
    let boxes = partitions_in_box(d, m);
    let mut layer: Vec<(Vec<usize>, u64)> = vec![(vec![0; d], 1)];
    for lam in shape {
        let mut next: Vec<(Vec<usize>, u64)> = Vec::new();
        for (inner, w) in &layer {
            for outer in &boxes {
                let c = lr_tableaux(outer, inner, lam);
                if c == 0 {
                    continue;
                }
                match next.iter_mut().find(|(p, _)| p == outer) {
                    Some((_, x)) => *x += w * c,
                    None => next.push((outer.clone(), w * c)),
                }
            }
        }
        layer = next;
    }
    layer.into_iter().filter(|(p, _)| p.iter().all(|&x| x == m)).map(|(_, w)| w).sum()
}

#[test]
fn oracle_sanity() {
    assert_eq!(hook_length_rectangle(2, 2), 2);
    assert_eq!(hook_length_rectangle(3, 3), 42);
    assert_eq!(lr_tableaux(&[2, 1], &[1, 0], &[1, 1]), 1);
    assert_eq!(lr_tableaux(&[2, 1], &[1, 0], &[2]), 1);
    assert_eq!(lr_tableaux(&[3, 2, 1], &[2, 1, 0], &[2, 1]), 2);
    assert_eq!(lr_rectangle(2, 2, &[vec![1], vec![1], vec![1], vec![1]]), 2);
    assert_eq!(partitions_in_box(2, 2).len(), 6);
}
