mod support;

use monolab::betti::{betti_table, suppreg};
use monolab::harness::{random_ideal, GeneratorSpec};
use monolab::{Characteristic, MonomialIdeal};
use std::collections::BTreeMap;
use support::golden::golden_ideals;
use support::taylor::taylor_betti;

fn library(i: &MonomialIdeal, ch: Characteristic) -> BTreeMap<(usize, Vec<u32>), usize> {
    betti_table(i, ch)
        .unwrap()
        .entries
        .into_iter()
        .map(|((k, b), r)| ((k, b.into_inner()), r))
        .collect()
}

fn gens(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    i.gens().iter().map(|g| g.exps().to_vec()).collect()
}

#[test]
fn golden_set_matches_taylor() {
    for (name, i) in golden_ideals() {
        if i.len() > 5 {
            continue;
        }
        assert_eq!(
            library(&i, Characteristic::Zero),
            taylor_betti(&gens(&i), 0),
            "{name}"
        );
        assert_eq!(
            library(&i, Characteristic::Prime(2)),
            taylor_betti(&gens(&i), 2),
            "{name}"
        );
    }
}

#[test]
fn golden_set_agrees_across_characteristics() {
    for (name, i) in golden_ideals() {
        assert_eq!(
            library(&i, Characteristic::Zero),
            library(&i, Characteristic::Prime(2)),
            "{name}"
        );
    }
}

#[test]
fn random_ideals_match_taylor() {
    let spec = GeneratorSpec {
        n: 4,
        max_exponent: 3,
        max_degree: 4,
        min_gens: 1,
        max_gens: 5,
        squarefree: false,
        seed: 11,
    };
    for k in 0..50 {
        let i = random_ideal(&spec, k).unwrap();
        assert_eq!(
            library(&i, Characteristic::Zero),
            taylor_betti(&gens(&i), 0),
            "{i}"
        );
    }
}

#[test]
fn suppreg_from_taylor() {
    for (name, i) in golden_ideals() {
        if i.len() > 5 {
            continue;
        }
        let t = taylor_betti(&gens(&i), 0);
        let expected = t
            .keys()
            .map(|(k, b)| b.iter().filter(|&&e| e > 0).count() as isize - *k as isize)
            .max()
            .unwrap();
        assert_eq!(suppreg(&i).unwrap() as isize, expected, "{name}");
    }
}
