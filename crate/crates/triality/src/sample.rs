//! Deterministic seeded sampling of the exact objects used by the property
//! suites. Everything is a pure function of the (seed, label) pair, so every
//! check is reproducible and two runs with the same seed are byte-identical.
//!
//! Isotropic vectors are drawn from the family a ∈ {−9..9}²ˣ², b = [[det a, 0],
//! [r, 1]]: then det b = det a, so the quadratic form vanishes, the vector is
//! never zero, and the family covers a dense set of the quadric.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{quad, BlockVector, Block2, RepTag};
use crate::exact::{rat, Rat};
use crate::linalg::{Matrix, Subspace};

/// Seeded generator; the label keeps independent checks on independent
/// streams under one user-facing seed.
pub struct SampleGen {
    rng: ChaCha8Rng,
}

fn fnv1a(label: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

impl SampleGen {
    pub fn new(seed: u64, label: &str) -> SampleGen {
        SampleGen { rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(label)) }
    }

    /// Uniform integer in −9..=9.
    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(-9..=9)
    }

    pub fn nonzero_int(&mut self) -> i64 {
        loop {
            let n = self.int();
            if n != 0 {
                return n;
            }
        }
    }

    pub fn block2(&mut self) -> Block2 {
        Block2::from_ints(self.int(), self.int(), self.int(), self.int())
    }

    pub fn block_vector(&mut self, tag: RepTag) -> BlockVector {
        BlockVector::new(tag, self.block2(), self.block2())
    }

    pub fn nonzero_block_vector(&mut self, tag: RepTag) -> BlockVector {
        loop {
            let x = self.block_vector(tag);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Nonzero vector with quad = 0 from the structured family.
    pub fn isotropic_vector(&mut self, tag: RepTag) -> BlockVector {
        let a = self.block2();
        let b = Block2::new(a.det(), rat(0), rat(self.int()), rat(1));
        let x = BlockVector::new(tag, a, b);
        debug_assert!(quad(&x).is_zero() && !x.is_zero());
        x
    }

    /// Vector with quad = 1 (b chosen with det b = det a − 1).
    pub fn unit_vector(&mut self, tag: RepTag) -> BlockVector {
        let a = self.block2();
        let b = Block2::new(a.det() - rat(1), rat(0), rat(self.int()), rat(1));
        BlockVector::new(tag, a, b)
    }

    /// Pair of projectively distinct isotropic vectors with ⟨s, s′⟩ = 0,
    /// produced by solving the one linear orthogonality condition inside the
    /// sampling family.
    pub fn isotropic_orthogonal_pair(&mut self, tag: RepTag) -> (BlockVector, BlockVector) {
        let s = self.isotropic_vector(tag);
        let a = &s.first;
        loop {
            // Draw a′ with a′₁₁ left free, then solve ⟨s, s′⟩ = 0 for it.
            let a00 = rat(self.int());
            let a01 = rat(self.int());
            let a10 = rat(self.int());
            if a00 == a.m[0][0] {
                continue;
            }
            let rhs = a.det() + &a.m[0][1] * &a10 + &a.m[1][0] * &a01
                - &a.m[1][1] * &a00
                - &a01 * &a10;
            let a11 = rhs / (&a.m[0][0] - &a00);
            let ap = Block2::new(a00, a01, a10, a11);
            let bp = Block2::new(ap.det(), rat(0), rat(self.int()), rat(1));
            let sp = BlockVector::new(tag, ap, bp);
            debug_assert!(quad(&sp).is_zero());
            debug_assert!(crate::clifford::bilinear(&s, &sp).is_zero());
            if !proportional(&s, &sp) {
                return (s, sp);
            }
        }
    }

    /// Pair of distinct isotropic vectors with ⟨s, s′⟩ ≠ 0.
    pub fn isotropic_nonorthogonal_pair(&mut self, tag: RepTag) -> (BlockVector, BlockVector) {
        loop {
            let s = self.isotropic_vector(tag);
            let sp = self.isotropic_vector(tag);
            if !crate::clifford::bilinear(&s, &sp).is_zero() {
                return (s, sp);
            }
        }
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rat> {
        Matrix::from_fn(rows, cols, |_, _| rat(self.int()))
    }

    /// Nonzero vector in a given subspace: a random small-integer combination
    /// of the basis.
    pub fn vector_in(&mut self, space: &Subspace) -> Vec<Rat> {
        assert!(space.dim() > 0, "no nonzero vectors in the zero subspace");
        loop {
            let mut v = vec![Rat::zero(); space.ambient_dim()];
            for row in space.basis_vectors() {
                let c = rat(self.int());
                for (x, b) in v.iter_mut().zip(&row) {
                    *x += &c * b;
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    pub fn u64(&mut self) -> u64 {
        self.rng.gen()
    }
}

fn proportional(x: &BlockVector, y: &BlockVector) -> bool {
    let m = Matrix::from_rows(vec![x.coords(), y.coords()]);
    m.rank() < 2
}
