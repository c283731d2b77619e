#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use radon_nets::space::{ConvexitySpace, GroundSet};
use radon_nets::spaces;
use radon_nets::{Distribution, Rational};

pub struct Named {
    pub name: String,
    pub space: ConvexitySpace,
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

/// Power sets m <= 5, cylinders n <= 3, every tree on <= 8 vertices, grids up
/// to 3x3, every poset on <= 4 elements and 200 random separable spaces on
/// <= 6 points.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for m in 1..=5 {
        out.push(Named {
            name: format!("power-{m}"),
            space: spaces::power_set_space(m).unwrap(),
        });
    }
    for n in 1..=3 {
        out.push(Named {
            name: format!("cylinders-{n}"),
            space: spaces::cylinder_space(n).unwrap(),
        });
    }
    for n in 1..=8 {
        for (i, edges) in spaces::nonisomorphic_trees(n).into_iter().enumerate() {
            let space = spaces::tree_space(GroundSet::indexed(n).unwrap(), &edges).unwrap();
            out.push(Named {
                name: format!("tree-{n}-{i}"),
                space,
            });
        }
    }
    for w in 1..=3 {
        for h in 1..=3 {
            let space = spaces::lattice_convex_space(w, h).unwrap();
            out.push(Named {
                name: format!("lattice-{w}x{h}"),
                space,
            });
        }
    }
    for n in 1..=4 {
        for (i, rel) in spaces::nonisomorphic_posets(n).into_iter().enumerate() {
            let space = spaces::linear_extension_space(n, &rel).unwrap();
            out.push(Named {
                name: format!("poset-{n}-{i}"),
                space,
            });
        }
    }
    for seed in 0..200u64 {
        let points = 1 + (seed as usize % 6);
        let space = spaces::random_separable(points, seed).unwrap();
        out.push(Named {
            name: format!("random-{points}-{seed}"),
            space,
        });
    }
    out
}

/// Uniform plus `count` seeded random rational distributions (weights drawn
/// from 0..=9, some points left without mass).
pub fn distributions(n: usize, count: usize, seed: u64) -> Vec<Distribution<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Distribution::uniform(n)];
    while out.len() < count + 1 {
        let raw: Vec<u32> = (0..n).map(|_| rng.gen_range(0..10)).collect();
        if raw.iter().all(|&w| w == 0) {
            continue;
        }
        let weights = raw
            .into_iter()
            .map(|w| Rational::from_integer(w.into()))
            .collect();
        out.push(Distribution::normalized(weights).unwrap());
    }
    out
}

pub fn epsilons() -> Vec<Rational> {
    vec![q(1, 4), q(1, 3), q(1, 2), q(3, 4)]
}
