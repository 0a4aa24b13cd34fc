//! Reduced simplicial homology over `ℚ` or `𝔽_p`.
//!
//! Faces are bitmasks over at most 24 vertices and the whole face poset is
//! materialized. Before any linear algebra the chain complex is shrunk by
//! free-face collapses and coreductions; both pair a cell with its unique
//! neighbour, so the reduced complex keeps the original incidence numbers
//! restricted to the surviving cells and no fill-in ever happens.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `𝔽_p`; `p` must be a prime below 2³¹.
    Prime(u32),
}

const MAX_VERTICES: usize = 24;

/// A simplicial complex given by its facets.
///
/// With no facets it is the void complex, with nothing in it; the facet
/// `{}` alone gives the empty complex `{∅}`, whose reduced homology is
/// concentrated in dimension −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    pub fn new(vertices: usize, facets: Vec<u32>) -> SimplicialComplex {
        assert!(vertices <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        assert!(
            facets.iter().all(|&f| (f as u64) < (1u64 << vertices)),
            "facet outside the vertex set"
        );
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: usize) -> SimplicialComplex {
        SimplicialComplex::new(vertices, Vec::new())
    }

    pub fn empty(vertices: usize) -> SimplicialComplex {
        SimplicialComplex::new(vertices, vec![0])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Indicator of every face, indexed by bitmask.
    pub fn face_indicator(&self) -> Vec<bool> {
        let n = 1usize << self.vertices;
        let mut alive = vec![false; n];
        for &f in &self.facets {
            alive[f as usize] = true;
        }
        for bit in 0..self.vertices {
            let b = 1usize << bit;
            for mask in (0..n).rev() {
                if mask & b != 0 && alive[mask] {
                    alive[mask ^ b] = true;
                }
            }
        }
        alive
    }

    /// Face counts by cardinality: `f[k]` faces with `k` vertices.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.vertices + 1];
        for (mask, &a) in self.face_indicator().iter().enumerate() {
            if a {
                f[mask.count_ones() as usize] += 1;
            }
        }
        f
    }

    /// `Σ_k (−1)^{k−1} f[k]`, the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Ranks of reduced homology: entry `k` is `dim H̃_{k−1}`, so entry 0 is
    /// `H̃_{−1}`. `seed` shuffles the order cells are visited for reduction.
    pub fn reduced_homology(&self, field: Field, seed: Option<u64>) -> Vec<u64> {
        reduced_homology_of(self.vertices, self.face_indicator(), field, seed)
    }
}

pub(crate) fn reduced_homology_of(vertices: usize, mut alive: Vec<bool>, field: Field, seed: Option<u64>) -> Vec<u64> {
    let mut order: Vec<u32> = (0..alive.len() as u32).filter(|&m| alive[m as usize]).collect();
    if let Some(seed) = seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    } else {
        // larger faces first: collapses from the top strip most cells
        order.sort_by_key(|m| m.count_ones());
    }
    reduce(vertices, &mut alive, order);

    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); vertices + 1];
    for (mask, &a) in alive.iter().enumerate() {
        if a {
            cells[mask.count_ones() as usize].push(mask as u32);
        }
    }
    // rank of ∂ from cardinality k to k − 1
    let ranks: Vec<u64> = (0..=vertices + 1)
        .map(|k| {
            if k == 0 || k > vertices || cells[k].is_empty() || cells[k - 1].is_empty() {
                0
            } else {
                boundary_rank(&cells[k - 1], &cells[k], field)
            }
        })
        .collect();
    (0..=vertices)
        .map(|k| cells[k].len() as u64 - ranks[k] - ranks[k + 1])
        .collect()
}

/// Collapses and coreductions to a fixed point.
fn reduce(vertices: usize, alive: &mut [bool], mut stack: Vec<u32>) {
    let unique_face = |alive: &[bool], c: u32| -> Option<u32> {
        let mut found = None;
        let mut bits = c;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits ^= b;
            if alive[(c ^ b) as usize] {
                if found.is_some() {
                    return None;
                }
                found = Some(c ^ b);
            }
        }
        found
    };
    let unique_coface = |alive: &[bool], c: u32| -> Option<u32> {
        let mut found = None;
        for v in 0..vertices {
            let b = 1u32 << v;
            if c & b == 0 && alive[(c | b) as usize] {
                if found.is_some() {
                    return None;
                }
                found = Some(c | b);
            }
        }
        found
    };
    let push_neighbours = |alive: &[bool], c: u32, stack: &mut Vec<u32>| {
        for v in 0..vertices {
            let n = c ^ (1u32 << v);
            if alive[n as usize] {
                stack.push(n);
            }
        }
    };
    while let Some(c) = stack.pop() {
        if !alive[c as usize] {
            continue;
        }
        let partner = unique_coface(alive, c).or_else(|| unique_face(alive, c));
        if let Some(d) = partner {
            alive[c as usize] = false;
            alive[d as usize] = false;
            push_neighbours(alive, c, &mut stack);
            push_neighbours(alive, d, &mut stack);
        }
    }
}

/// Incidence number `[face : cell]` for `face = cell \ {v}`.
fn sign(cell: u32, v: u32) -> i64 {
    if (cell & (v - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn boundary_rank(rows: &[u32], cols: &[u32], field: Field) -> u64 {
    let row_index = |m: u32| rows.binary_search(&m).ok();
    let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, &c) in cols.iter().enumerate() {
        let mut bits = c;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits ^= b;
            if let Some(i) = row_index(c ^ b) {
                matrix[i][j] = sign(c, b);
            }
        }
    }
    match field {
        Field::Rational => rank_bareiss(matrix),
        Field::Prime(p) => {
            assert!((2..1 << 31).contains(&p), "prime must fit in 31 bits");
            rank_mod_p(matrix, p as i64)
        }
    }
}

/// Fraction-free Gaussian elimination over `ℤ`.
fn rank_bareiss(matrix: Vec<Vec<i64>>) -> u64 {
    let mut m: Vec<Vec<BigInt>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank as u64
}

fn rank_mod_p(matrix: Vec<Vec<i64>>, p: i64) -> u64 {
    let mut m: Vec<Vec<i64>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let inverse = |a: i64| {
        // Fermat: a^{p−2}
        let (mut base, mut exp, mut acc) = (a, p - 2, 1i64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse(m[rank][col]);
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[col] * inv % p;
            if factor != 0 {
                for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = (*x - factor * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_from_homology(h: &[u64]) -> i64 {
        h.iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) })
            .sum()
    }

    #[test]
    fn void_and_empty() {
        assert_eq!(SimplicialComplex::void(2).reduced_homology(Field::Rational, None), vec![0, 0, 0]);
        assert_eq!(SimplicialComplex::empty(2).reduced_homology(Field::Rational, None), vec![1, 0, 0]);
    }

    #[test]
    fn spheres_and_balls() {
        // boundary of the triangle: a circle
        let circle = SimplicialComplex::new(3, vec![0b011, 0b101, 0b110]);
        assert_eq!(circle.reduced_homology(Field::Rational, None), vec![0, 0, 1, 0]);
        // boundary of the tetrahedron: a 2-sphere
        let sphere = SimplicialComplex::new(4, vec![0b0111, 0b1011, 0b1101, 0b1110]);
        assert_eq!(sphere.reduced_homology(Field::Rational, None), vec![0, 0, 0, 1, 0]);
        let simplex = SimplicialComplex::new(4, vec![0b1111]);
        assert_eq!(simplex.reduced_homology(Field::Prime(2), None), vec![0; 5]);
        // two points
        let points = SimplicialComplex::new(2, vec![0b01, 0b10]);
        assert_eq!(points.reduced_homology(Field::Rational, None), vec![0, 1, 0]);
    }

    #[test]
    fn projective_plane_sees_the_field() {
        // six-vertex triangulation of ℝP²
        let faces = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets = faces.iter().map(|f| f.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let rp2 = SimplicialComplex::new(6, facets);
        assert_eq!(rp2.reduced_homology(Field::Rational, None), vec![0; 7]);
        assert_eq!(rp2.reduced_homology(Field::Prime(2), None), vec![0, 0, 1, 1, 0, 0, 0]);
        assert_eq!(rp2.reduced_euler_characteristic(), 0);
    }

    #[test]
    fn order_does_not_matter() {
        let complex = SimplicialComplex::new(6, vec![0b000111, 0b001110, 0b011100, 0b111000, 0b110001, 0b100011, 0b101010]);
        let base = complex.reduced_homology(Field::Rational, None);
        for seed in 0..20 {
            assert_eq!(complex.reduced_homology(Field::Rational, Some(seed)), base);
            assert_eq!(complex.reduced_homology(Field::Prime(101), Some(seed)), base);
        }
        assert_eq!(euler_from_homology(&base), complex.reduced_euler_characteristic());
    }

    #[test]
    fn ranks_without_reduction() {
        // the reduction never sees this matrix; check both eliminations directly
        let m = vec![vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 1]];
        assert_eq!(rank_bareiss(m.clone()), 2);
        assert_eq!(rank_mod_p(m.clone(), 3), 2);
        assert_eq!(rank_mod_p(vec![vec![2, 0], vec![0, 2]], 2), 0);
        assert_eq!(rank_bareiss(vec![vec![2, 0], vec![0, 2]]), 2);
    }
}
