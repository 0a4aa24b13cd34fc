#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use pferrer::{Cell, Monomial, PFerrerPartition, Variable};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixtures_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture(name: &str) -> PFerrerPartition {
    PFerrerPartition::parse(&read_fixture(name)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Down-closure of a few random points, kept within the oracle's reach:
/// at most `max_boxes` boxes and 16 variables.
pub fn random_diagram(rng: &mut ChaCha8Rng, max_boxes: usize) -> PFerrerPartition {
    loop {
        let p = rng.gen_range(1..=4usize);
        let bound = [12u32, 6, 4, 3][p - 1];
        let points: Vec<Vec<u32>> = (0..rng.gen_range(1..=4))
            .map(|_| (0..p).map(|_| rng.gen_range(1..=bound)).collect())
            .collect();
        let cells = down_closure(&points);
        if cells.len() <= max_boxes {
            return PFerrerPartition::from_cells(p, cells.iter()).unwrap();
        }
    }
}

pub fn down_closure(points: &[Vec<u32>]) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for point in points {
        let mut coords = vec![1u32; point.len()];
        loop {
            out.insert(Cell::new(coords.clone()));
            let Some(i) = (0..coords.len()).find(|&i| coords[i] < point[i]) else {
                break;
            };
            coords[i] += 1;
            for c in coords.iter_mut().take(i) {
                *c = 1;
            }
        }
    }
    out
}

/// Every partition of every `n ≤ max`, as 2-Ferrer diagrams.
pub fn staircases(max: u32) -> Vec<PFerrerPartition> {
    fn parts(n: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(cap)).rev() {
            prefix.push(k);
            parts(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    for n in 1..=max {
        parts(n, n, &mut Vec::new(), &mut all);
    }
    all.into_iter()
        .map(|rows| PFerrerPartition::from_json(&serde_json::json!(rows)).unwrap())
        .collect()
}

/// The named diagrams every cross-check runs over.
pub fn standard_fixtures(random: usize, seed: u64) -> Vec<(String, PFerrerPartition)> {
    let mut out = vec![
        ("4322".to_string(), fixture("4322.json")),
        ("54432".to_string(), fixture("54432.json")),
    ];
    for p in 1..=3 {
        for c in 1..=3 {
            out.push((format!("full({p},{c})"), PFerrerPartition::full_diagram(p, c as u32)));
        }
    }
    for phi in staircases(12) {
        out.push((phi.to_string(), phi));
    }
    let mut rng = rng(seed);
    for i in 0..random {
        out.push((format!("random#{i}"), random_diagram(&mut rng, 40)));
    }
    out
}

/// `s1t2u1v1` with `s ↦ group 1, t ↦ group 2, …`.
pub fn lettered_monomial(text: &str, groups: &serde_json::Map<String, serde_json::Value>) -> Monomial {
    let mut vars = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(letter) = chars.next() {
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let group = groups[&letter.to_string()].as_u64().unwrap() as u32;
        vars.push(Variable::new(group, digits.parse().unwrap()));
    }
    Monomial::product(vars.iter())
}
