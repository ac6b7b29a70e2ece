//! Betti numbers from the Taylor complex, computed independently of the
//! library's homology routines.
//!
//! In multidegree `b` the strand of the Taylor resolution has a basis of the
//! generator subsets with lcm exactly `b`; its homology in position `i` is
//! `β_{i,b}`.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

/// Nonzero `β_{i,b}` keyed by `(i, b)`; `p == 0` means the rationals.
pub fn taylor_betti(gens: &[Vec<u32>], p: u64) -> BTreeMap<(usize, Vec<u32>), usize> {
    let m = gens.len();
    assert!(m <= 14, "Taylor oracle limited to small generator sets");
    let n = gens.first().map_or(0, Vec::len);
    let lcm = |mask: usize| -> Vec<u32> {
        (0..n)
            .map(|k| {
                (0..m)
                    .filter(|&j| mask >> j & 1 == 1)
                    .map(|j| gens[j][k])
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    };
    let mut strands: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for mask in 1usize..(1 << m) {
        strands.entry(lcm(mask)).or_default().push(mask);
    }
    let mut out = BTreeMap::new();
    for (b, masks) in strands {
        let by_size = |s: usize| -> Vec<usize> {
            masks
                .iter()
                .copied()
                .filter(|x| x.count_ones() as usize == s)
                .collect()
        };
        // rank of the map from size-s subsets to size-(s-1) subsets
        let boundary_rank = |s: usize| -> usize {
            if s < 2 {
                return 0;
            }
            let src = by_size(s);
            let dst = by_size(s - 1);
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let mat: Vec<Vec<i128>> = src
                .iter()
                .map(|&x| {
                    dst.iter()
                        .map(|&y| {
                            if y & x != y {
                                return 0;
                            }
                            let removed = (x ^ y).trailing_zeros();
                            let below = (x & ((1 << removed) - 1)).count_ones();
                            if below % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .collect()
                })
                .collect();
            rank(mat, p)
        };
        for s in 1..=m {
            let dim = by_size(s).len();
            if dim == 0 {
                continue;
            }
            let h = dim - boundary_rank(s) - boundary_rank(s + 1);
            if h > 0 {
                out.insert((s - 1, b.clone()), h);
            }
        }
    }
    out
}

/// Exact rank by Gaussian elimination over `Q` (with `i128` fractions kept
/// integral by cross-multiplication) or over `F_p`.
pub fn rank(mut a: Vec<Vec<i128>>, p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let p = p as i128;
    if p > 0 {
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                *x = x.rem_euclid(p);
            }
        }
    }
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let (f, g) = (a[i][c], a[r][c]);
            for k in c..cols {
                let v = a[i][k] * g - a[r][k] * f;
                a[i][k] = if p > 0 { v.rem_euclid(p) } else { v };
            }
            if p == 0 {
                let d = a[i].iter().fold(0i128, |acc, &x| gcd(acc, x.abs()));
                if d > 1 {
                    a[i].iter_mut().for_each(|x| *x /= d);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
