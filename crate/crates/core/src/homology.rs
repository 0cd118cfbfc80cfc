//! Reduced simplicial homology over prime fields, and the homological
//! Cohen-Macaulay (Reisner) and Gorenstein (homology-sphere core) criteria.
//!
//! Faces are ordered dimension-major, then lexicographically; the boundary of
//! a face `{v₀ < … < v_i}` is `Σ_j (-1)^j {v₀, …, v̂_j, …, v_i}`, and `∂₀` maps
//! every vertex to the empty face.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, Timeout};
use crate::complex::SimplicialComplex;
use crate::graph::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("boundary dimension {dim} outside 0..={top}")]
    DimensionOutOfRange { dim: isize, top: isize },
}

/// The field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const GF2: PrimeField = PrimeField { p: 2 };
    pub const GF32003: PrimeField = PrimeField { p: 32003 };

    pub fn new(p: u64) -> Result<PrimeField, HomologyError> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn characteristic(self) -> u32 {
        self.p
    }

    #[inline]
    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let mut result = 1u32;
        let mut base = a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    fn sign(self, negative: bool) -> u32 {
        if negative {
            self.p - 1
        } else {
            1
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over a prime field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
    field: PrimeField,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            field,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    /// `self * other` over the shared field.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut out = Matrix::zeros(self.rows, other.cols, f);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, (cur + f.mul(a, b)) % f.p);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    m.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = f.inv(m[rank * cols + col]);
            for c in col..cols {
                m[rank * cols + c] = f.mul(m[rank * cols + c], inv);
            }
            for r in rank + 1..rows {
                let factor = m[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = f.mul(factor, m[rank * cols + c]);
                    m[r * cols + c] = f.sub(m[r * cols + c], sub);
                }
            }
            rank += 1;
        }
        rank
    }
}

fn boundary_between(lower: &[VertexSet], upper: &[VertexSet], field: PrimeField) -> Matrix {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, f)| (f.bits(), i)).collect();
    let mut m = Matrix::zeros(lower.len(), upper.len(), field);
    for (col, face) in upper.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let mut facet = *face;
            facet.remove(v);
            let row = index[&facet.bits()];
            m.set(row, col, field.sign(j % 2 == 1));
        }
    }
    m
}

/// Matrix of `∂_dim` from `dim`-faces (columns) to `(dim-1)`-faces (rows).
pub fn boundary_matrix(k: &SimplicialComplex, dim: isize, field: PrimeField) -> Result<Matrix, HomologyError> {
    let top = k.dimension();
    if dim < 0 || dim > top {
        return Err(HomologyError::DimensionOutOfRange { dim, top });
    }
    let by_dim = k.faces_by_dimension();
    let d = dim as usize;
    Ok(boundary_between(&by_dim[d], &by_dim[d + 1], field))
}

/// Reduced Betti numbers `β̃₋₁ … β̃_d` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub characteristic: u32,
    pub dimension: isize,
    /// `betti[i + 1]` is `β̃_i`, for `i` from `-1` to `dimension`.
    pub betti: Vec<usize>,
}

impl HomologyProfile {
    pub fn reduced_betti(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.betti.get(k).copied())
            .unwrap_or(0)
    }

    /// `β̃₀ … β̃_d`.
    pub fn from_dimension_zero(&self) -> &[usize] {
        &self.betti[1..]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Homology vanishes strictly below the top dimension.
    pub fn acyclic_below_top(&self) -> bool {
        (-1..self.dimension).all(|i| self.reduced_betti(i) == 0)
    }

    /// Homology of a sphere of the complex's own dimension.
    pub fn is_sphere(&self) -> bool {
        self.acyclic_below_top() && self.reduced_betti(self.dimension) == 1
    }
}

pub fn reduced_betti_numbers(k: &SimplicialComplex, field: PrimeField) -> HomologyProfile {
    let by_dim = k.faces_by_dimension();
    let levels = by_dim.len(); // dimensions -1..=d
    // ranks[s] = rank of the boundary out of faces of size s (s >= 1).
    let mut ranks = vec![0usize; levels + 1];
    for s in 1..levels {
        ranks[s] = boundary_between(&by_dim[s - 1], &by_dim[s], field).rank();
    }
    let betti: Vec<usize> = (0..levels)
        .map(|s| by_dim[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    let profile = HomologyProfile {
        characteristic: field.characteristic(),
        dimension: k.dimension(),
        betti,
    };
    assert_eq!(
        profile.euler_characteristic(),
        k.reduced_euler_characteristic(),
        "Euler-Poincare identity failed"
    );
    profile
}

/// Homology of one face link, as reported by [`link_reports`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub face: VertexSet,
    pub profile: HomologyProfile,
    pub cohen_macaulay: bool,
    pub sphere: bool,
}

/// Homology of the link of every face (including `∅`).
pub fn link_reports(k: &SimplicialComplex, field: PrimeField, budget: &Budget) -> Result<Vec<LinkReport>, Timeout> {
    let mut out = Vec::new();
    for face in k.faces() {
        budget.check()?;
        let link = k.link(face).expect("face of the complex");
        let profile = reduced_betti_numbers(&link, field);
        out.push(LinkReport {
            face,
            cohen_macaulay: profile.acyclic_below_top(),
            sphere: profile.is_sphere(),
            profile,
        });
    }
    Ok(out)
}

fn all_links<P>(k: &SimplicialComplex, field: PrimeField, budget: &Budget, pred: P) -> Result<bool, Timeout>
where
    P: Fn(&HomologyProfile) -> bool,
{
    let facets = k.facets();
    for face in k.faces() {
        budget.check()?;
        // Links of facets are {∅}, which passes every test here.
        if facets.contains(&face) {
            continue;
        }
        let link = k.link(face).expect("face of the complex");
        if !pred(&reduced_betti_numbers(&link, field)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reisner: every link has vanishing reduced homology below its dimension.
pub fn is_cm_complex(k: &SimplicialComplex, field: PrimeField) -> bool {
    cm_complex_within(k, field, &Budget::unlimited()).expect("unlimited budget")
}

pub fn cm_complex_within(k: &SimplicialComplex, field: PrimeField, budget: &Budget) -> Result<bool, Timeout> {
    all_links(k, field, budget, HomologyProfile::acyclic_below_top)
}

/// The core of `k` is a homology sphere: every link has the homology of a
/// sphere of its own dimension (`{∅}` counting as the `(-1)`-sphere).
pub fn is_gorenstein_complex(k: &SimplicialComplex, field: PrimeField) -> bool {
    gorenstein_complex_within(k, field, &Budget::unlimited()).expect("unlimited budget")
}

pub fn gorenstein_complex_within(k: &SimplicialComplex, field: PrimeField, budget: &Budget) -> Result<bool, Timeout> {
    all_links(&k.core(), field, budget, HomologyProfile::is_sphere)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::independence_complex;
    use crate::gallery::{cycle, cycle_complement, path, q12, q9};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn field_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn boundary_of_points() {
        let k = SimplicialComplex::from_facets(3, [set(&[0]), set(&[1]), set(&[2])]);
        let d0 = boundary_matrix(&k, 0, PrimeField::GF2).unwrap();
        assert_eq!((d0.rows, d0.cols), (1, 3));
        assert!((0..3).all(|c| d0.get(0, c) == 1));
        assert!(boundary_matrix(&k, 1, PrimeField::GF2).is_err());
        assert!(boundary_matrix(&k, -1, PrimeField::GF2).is_err());
    }

    #[test]
    fn chain_condition_on_q9() {
        let k = independence_complex(&q9());
        for field in [PrimeField::GF2, PrimeField::new(3).unwrap(), PrimeField::GF32003] {
            for dim in 1..=k.dimension() {
                let lower = boundary_matrix(&k, dim - 1, field).unwrap();
                let upper = boundary_matrix(&k, dim, field).unwrap();
                assert!(lower.mul(&upper).is_zero());
            }
        }
    }

    /// Independent rank oracle for GF(2): elimination on bit rows.
    fn gf2_rank(m: &Matrix) -> usize {
        let mut rows: Vec<u128> = (0..m.rows)
            .map(|r| (0..m.cols).fold(0u128, |acc, c| acc | ((m.get(r, c) as u128 & 1) << c)))
            .collect();
        let mut rank = 0;
        for c in 0..m.cols {
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> c & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..rows.len() {
                    if r != rank && rows[r] >> c & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn hexagon_boundary_rank() {
        let k = independence_complex(&cycle_complement(6).unwrap());
        let d1 = boundary_matrix(&k, 1, PrimeField::GF2).unwrap();
        assert_eq!(gf2_rank(&d1), 5);
        assert_eq!(d1.rank(), 5);
    }

    #[test]
    fn circle_and_spheres() {
        for n in 4..=12 {
            let k = independence_complex(&cycle_complement(n).unwrap());
            let p = reduced_betti_numbers(&k, PrimeField::GF2);
            assert_eq!(p.from_dimension_zero(), &[0, 1]);
        }
        let p = reduced_betti_numbers(&independence_complex(&q12()), PrimeField::GF32003);
        assert_eq!(p.from_dimension_zero(), &[0, 0, 0, 1]);
        let empty = reduced_betti_numbers(&SimplicialComplex::empty_face_only(0), PrimeField::GF2);
        assert_eq!(empty.betti, vec![1]);
        assert!(empty.is_sphere());
    }

    #[test]
    fn reisner_examples() {
        let gf2 = PrimeField::GF2;
        assert!(is_cm_complex(&independence_complex(&cycle(5).unwrap()), gf2));
        assert!(!is_cm_complex(&independence_complex(&path(3).unwrap()), gf2));
        assert!(is_cm_complex(&independence_complex(&q12()), gf2));
    }

    #[test]
    fn gorenstein_examples() {
        let gf2 = PrimeField::GF2;
        assert!(is_gorenstein_complex(&independence_complex(&path(2).unwrap()), gf2));
        for n in 4..=12 {
            assert!(is_gorenstein_complex(&independence_complex(&cycle_complement(n).unwrap()), gf2));
        }
        assert!(!is_gorenstein_complex(&independence_complex(&path(4).unwrap()), gf2));
        // A simplex is a cone; its core {∅} is the (-1)-sphere.
        let simplex = SimplicialComplex::from_facets(3, [set(&[0, 1, 2])]);
        assert!(is_gorenstein_complex(&simplex, gf2));
    }

    #[test]
    fn torsion_shows_up_only_in_characteristic_two() {
        // Six-vertex triangulation of the real projective plane.
        let rp2 = SimplicialComplex::from_facets(
            6,
            [
                [0, 1, 2],
                [0, 2, 3],
                [0, 3, 4],
                [0, 4, 5],
                [0, 5, 1],
                [1, 2, 4],
                [2, 3, 5],
                [3, 4, 1],
                [4, 5, 2],
                [5, 1, 3],
            ]
            .iter()
            .map(|f| set(f)),
        );
        assert_eq!(rp2.f_vector().0, vec![6, 15, 10]);
        let gf2 = reduced_betti_numbers(&rp2, PrimeField::GF2);
        let gf3 = reduced_betti_numbers(&rp2, PrimeField::new(3).unwrap());
        assert_eq!(gf2.from_dimension_zero(), &[0, 1, 1]);
        assert_eq!(gf3.from_dimension_zero(), &[0, 0, 0]);
        assert!(is_cm_complex(&rp2, PrimeField::new(3).unwrap()));
        assert!(!is_cm_complex(&rp2, PrimeField::GF2));
    }
}
