//! Exhaustive enumeration of simplicial complexes on small ground sets.

use monolab::complex::{Face, SimplicialComplex};

/// Every antichain of subsets of `[n]`, i.e. every complex including the void one.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let faces: Vec<u64> = (0..1u64 << n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    walk(n, &faces, 0, &mut chosen, &mut out);
    out
}

fn walk(
    n: usize,
    faces: &[u64],
    start: usize,
    chosen: &mut Vec<u64>,
    out: &mut Vec<SimplicialComplex>,
) {
    out.push(SimplicialComplex::new(n, chosen.iter().map(|&m| Face::from_mask(m))).unwrap());
    for k in start..faces.len() {
        let f = faces[k];
        if chosen.iter().any(|&g| g & f == g || g & f == f) {
            continue;
        }
        chosen.push(f);
        walk(n, faces, k + 1, chosen, out);
        chosen.pop();
    }
}

/// All faces of a complex, by brute force over subsets.
pub fn faces_of(d: &SimplicialComplex) -> Vec<u64> {
    (0..1u64 << d.n())
        .filter(|&m| d.facets().iter().any(|f| m & f.mask() == m))
        .collect()
}
