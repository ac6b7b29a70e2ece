mod support;

use monolab::betti::alexander_dual_ideal;
use monolab::complex::{dual_ideal, eagon_complex, sr_complex, stanley_reisner, SimplicialComplex};
use monolab::harness::{instance_rng, random_ideal, GeneratorSpec};
use monolab::mono::{minimalize, Monomial};
use monolab::{ExponentVector, MonomialIdeal};
use rand::Rng;
use support::complexes::{all_complexes, faces_of};

fn squarefree_monomial(n: usize, mask: u64) -> Monomial {
    Monomial::squarefree(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}

#[test]
fn eagon_and_dual_are_inverse() {
    for n in 1..=4 {
        for d in all_complexes(n) {
            let i = dual_ideal(&d);
            assert_eq!(eagon_complex(&i).unwrap(), d);
            // Every squarefree ideal arises as some dual ideal.
            assert_eq!(dual_ideal(&eagon_complex(&i).unwrap()), i);
        }
    }
}

#[test]
fn squarefree_ideals_round_trip_exhaustively() {
    // Squarefree ideals on [n] are antichains of subsets, so they are
    // enumerated through the same antichains read as supports.
    for n in 1..=4 {
        for d in all_complexes(n) {
            let i = MonomialIdeal::new(
                n,
                d.facets().iter().map(|f| squarefree_monomial(n, f.mask())),
            )
            .unwrap();
            let e = eagon_complex(&i).unwrap();
            assert_eq!(dual_ideal(&e), i, "{i}");
            assert_eq!(stanley_reisner(&sr_complex(&i).unwrap()).unwrap(), i, "{i}");
        }
    }
}

#[test]
fn stanley_reisner_matches_brute_force() {
    for n in 1..=4 {
        for d in all_complexes(n) {
            let faces = faces_of(&d);
            let nonfaces = (0..1u64 << n)
                .filter(|m| !faces.contains(m))
                .map(|m| squarefree_monomial(n, m));
            assert_eq!(stanley_reisner(&d).unwrap(), minimalize(n, nonfaces), "{d}");
            assert_eq!(sr_complex(&stanley_reisner(&d).unwrap()).unwrap(), d);
        }
    }
}

#[test]
fn skeleton_dual_ideal_identity() {
    for n in 1..=5 {
        for d in all_complexes(n) {
            let Some(dim) = d.dim() else { continue };
            let dual = dual_ideal(&d);
            for s in 0..=dim.max(0) as usize {
                for r in 0..=s {
                    let Ok(sk) = d.skeleton(r, s) else { continue };
                    // Faces of dimension <= s have complements of degree >= n - s - 1.
                    let candidates =
                        (0..1u64 << n)
                            .map(|m| squarefree_monomial(n, m))
                            .filter(|f| {
                                f.degree() as usize + 1 >= n - s
                                    && dual
                                        .gens()
                                        .iter()
                                        .any(|u| (u.degree() as usize) < n - r && u.divides(f))
                            });
                    assert_eq!(
                        dual_ideal(&sk),
                        minimalize(n, candidates),
                        "{d} r={r} s={s}"
                    );
                    // The bounds without the shift disagree already on a single vertex.
                    if n == 1 && r == 0 && s == 0 {
                        let literal =
                            (0..1u64 << n)
                                .map(|m| squarefree_monomial(n, m))
                                .filter(|f| {
                                    f.degree() as usize >= n - s
                                        && dual.gens().iter().any(|u| u.divides(f))
                                });
                        assert_ne!(dual_ideal(&sk), minimalize(n, literal));
                    }
                }
            }
        }
    }
}

#[test]
fn facet_skeleton_dual_is_wedge() {
    for n in 1..=5 {
        for d in all_complexes(n) {
            if d.is_void() || d.facets().iter().any(|f| f.is_empty()) {
                continue;
            }
            let sk = d.facet_skeleton(1).unwrap();
            assert_eq!(dual_ideal(&sk), dual_ideal(&d).wedge_maximal(), "{d}");
            if let Ok(sk2) = d.facet_skeleton(2) {
                assert_eq!(dual_ideal(&sk2), dual_ideal(&sk).wedge_maximal(), "{d}");
            }
        }
    }
}

#[test]
fn alexander_dual_is_an_involution() {
    let spec = GeneratorSpec {
        n: 4,
        max_exponent: 3,
        max_degree: 5,
        min_gens: 1,
        max_gens: 5,
        squarefree: false,
        seed: 99,
    };
    for k in 0..100 {
        let i = random_ideal(&spec, k).unwrap();
        let mut rng = instance_rng(1234, k);
        let g: Vec<u32> = (0..4)
            .map(|v| i.gens().iter().map(|u| u.exp(v)).max().unwrap() + rng.gen_range(0..2))
            .collect();
        let g = ExponentVector::new(g);
        let dual = alexander_dual_ideal(&i, &g).unwrap();
        assert_eq!(alexander_dual_ideal(&dual, &g).unwrap(), i, "{i} g={g:?}");
    }
}

#[test]
fn squarefree_alexander_dual_is_classical() {
    for n in 1..=4 {
        for d in all_complexes(n) {
            let i = dual_ideal(&d);
            if i.is_trivial() {
                continue;
            }
            let ones = ExponentVector::new(vec![1; n]);
            assert_eq!(
                alexander_dual_ideal(&i, &ones).unwrap(),
                stanley_reisner(&d).unwrap(),
                "{d}"
            );
        }
    }
}

#[test]
fn void_and_empty_face_duals() {
    assert!(dual_ideal(&SimplicialComplex::void(3)).is_zero());
    assert_eq!(
        dual_ideal(&SimplicialComplex::empty_face(3)),
        MonomialIdeal::principal(Monomial::squarefree(3, [0, 1, 2]))
    );
}
