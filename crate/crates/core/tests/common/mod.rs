//! Seeded random formula generators shared by the integration suites.

#![allow(dead_code)]

use mbnf_core::{Formula, ModalAtomTable};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub const ATOMS: [&str; 3] = ["a", "b", "c"];

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn f(s: &str) -> Formula {
    mbnf_core::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn leaf(rng: &mut TestRng, atoms: &[&str]) -> Formula {
    match rng.gen_range(0..10) {
        0 => Formula::True,
        1 => Formula::False,
        _ => Formula::atom(atoms.choose(rng).unwrap()),
    }
}

fn connective(rng: &mut TestRng, mut sub: impl FnMut(&mut TestRng) -> Formula) -> Formula {
    match rng.gen_range(0..4) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        _ => Formula::implies(sub(rng), sub(rng)),
    }
}

/// Objective formula with at most `height` connective levels.
pub fn objective(rng: &mut TestRng, atoms: &[&str], height: u32) -> Formula {
    if height == 0 || rng.gen_bool(0.35) {
        return leaf(rng, atoms);
    }
    connective(rng, |r| objective(r, atoms, height - 1))
}

/// Arbitrary formula with modal depth at most `depth`; `naf` allows `not`.
pub fn modal(rng: &mut TestRng, atoms: &[&str], height: u32, depth: u32, naf: bool) -> Formula {
    if height == 0 || rng.gen_bool(0.3) {
        if depth > 0 && rng.gen_bool(0.5) {
            let body = modal(rng, atoms, height.saturating_sub(1).min(2), depth - 1, naf);
            return if naf && rng.gen_bool(0.5) { Formula::naf(body) } else { Formula::believe(body) };
        }
        return leaf(rng, atoms);
    }
    connective(rng, |r| modal(r, atoms, height - 1, depth, naf))
}

/// Flat formula: Boolean combinations of modal atoms over objective bodies.
pub fn flat(rng: &mut TestRng, atoms: &[&str], height: u32, naf: bool) -> Formula {
    if height == 0 || rng.gen_bool(0.3) {
        if rng.gen_range(0..8) == 0 {
            return if rng.gen_bool(0.5) { Formula::True } else { Formula::False };
        }
        let body = objective(rng, atoms, 2);
        return if naf && rng.gen_bool(0.5) { Formula::naf(body) } else { Formula::believe(body) };
    }
    connective(rng, |r| flat(r, atoms, height - 1, naf))
}

/// Sub-alphabet of 1..=3 atoms.
pub fn alphabet(rng: &mut TestRng) -> Vec<&'static str> {
    let n = rng.gen_range(1..=3);
    let mut atoms = ATOMS.to_vec();
    atoms.shuffle(rng);
    atoms.truncate(n);
    atoms.sort();
    atoms
}

/// A theory with at most four distinct modal atoms and modal depth at most
/// two. Every other call yields a flat theory.
pub fn theory(rng: &mut TestRng, index: usize) -> Formula {
    loop {
        let atoms = alphabet(rng);
        let f =
            if index.is_multiple_of(2) { modal(rng, &atoms, 4, 2, true) } else { flat(rng, &atoms, 3, true) };
        let table = ModalAtomTable::new(&f);
        if f.depth() <= 2 && table.len() <= 4 && !table.is_empty() {
            return f;
        }
    }
}

/// Positive query over the shared atoms, modal depth at most two.
pub fn query(rng: &mut TestRng) -> Formula {
    loop {
        let f = modal(rng, &ATOMS, 3, 2, false);
        if ModalAtomTable::new(&f).len() <= 3 {
            return f;
        }
    }
}

/// `count` seeded theory/query pairs.
pub fn corpus(seed: u64, count: usize) -> Vec<(Formula, Formula)> {
    let mut rng = rng(seed);
    (0..count).map(|i| (theory(&mut rng, i), query(&mut rng))).collect()
}
