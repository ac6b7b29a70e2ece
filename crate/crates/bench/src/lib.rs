//! Fixture inputs shared by the benchmarks.

use monolab::harness::{random_ideal, GeneratorSpec};
use monolab::MonomialIdeal;

/// The seven-generator ideal whose support components all have linear quotients
/// but which admits no support-degree increasing admissible order.
pub fn seven_generator_ideal() -> MonomialIdeal {
    MonomialIdeal::from_exps(
        4,
        &[
            &[0, 1, 1, 0],
            &[1, 1, 0, 2],
            &[0, 3, 0, 2],
            &[0, 0, 1, 1],
            &[1, 0, 1, 0],
            &[0, 0, 2, 0],
            &[2, 1, 0, 1],
        ],
    )
}

/// Deterministic random ideals for throughput benchmarks.
pub fn random_batch(n: usize, count: u64, seed: u64) -> Vec<MonomialIdeal> {
    let spec = GeneratorSpec {
        n,
        seed,
        ..GeneratorSpec::default()
    };
    (0..count)
        .map(|i| random_ideal(&spec, i).expect("default bounds are satisfiable"))
        .collect()
}
