//! Named ideals taken from the worked examples.

use monolab::MonomialIdeal;

fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exps(n, rows)
}

pub fn golden_ideals() -> Vec<(&'static str, MonomialIdeal)> {
    vec![
        (
            "four-generator",
            ideal(
                4,
                &[&[2, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 1, 1], &[0, 0, 1, 2]],
            ),
        ),
        (
            "four-generator-component",
            ideal(4, &[&[2, 1, 0, 0], &[0, 0, 1, 2]]),
        ),
        (
            "seven-generator",
            ideal(
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
            ),
        ),
        (
            "pack",
            ideal(3, &[&[0, 4, 0], &[1, 3, 0], &[0, 3, 1], &[2, 1, 1]]),
        ),
        ("wp-pair", ideal(3, &[&[1, 1, 0], &[0, 3, 0]])),
        (
            "wp-pair-wedge",
            ideal(3, &[&[1, 3, 0], &[0, 3, 1], &[1, 1, 1]]),
        ),
        (
            "not-cpt-wp",
            ideal(
                5,
                &[
                    &[1, 0, 1, 0, 0],
                    &[0, 1, 1, 0, 0],
                    &[1, 0, 0, 1, 1],
                    &[0, 1, 0, 1, 1],
                ],
            ),
        ),
        (
            "wp-profile-1",
            ideal(
                3,
                &[
                    &[3, 0, 0],
                    &[2, 1, 0],
                    &[2, 0, 1],
                    &[0, 2, 1],
                    &[0, 1, 2],
                    &[1, 0, 3],
                ],
            ),
        ),
        ("wp-profile-2", ideal(4, &[&[0, 1, 0, 0], &[0, 0, 1, 1]])),
        (
            "wp-profile-3",
            ideal(
                3,
                &[&[2, 1, 0], &[1, 2, 0], &[0, 0, 2], &[0, 1, 1], &[1, 0, 1]],
            ),
        ),
        ("weakly-stable", ideal(3, &[&[1, 1, 0], &[0, 0, 1]])),
        ("maximal", ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("principal", ideal(3, &[&[2, 0, 1]])),
        (
            "path",
            ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]),
        ),
        ("squares", ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])),
    ]
}
