//! Half-spinor spaces as exterior algebras, at desk scale.
//!
//! For an n-dimensional isotropic summand N the half-spinor spaces are
//! S⁺ = Λ^even N and S⁻ = Λ^odd N. The canonical pairing is
//! r(s, t) = (β(s) ∧ t)_n where β is the principal anti-involution (identity
//! on N, reversing products) and ()_n takes the top-degree component. This
//! module builds the pairing matrices exactly and reports their symmetry
//! type, and exhibits the parity bijection behind the dimension identity
//! for a direct sum N₁ ⊕ N₂.

use num::One;

use crate::exact::Rat;
use crate::linalg::Matrix;

/// Behaviour of the pairing r restricted to a half-spinor space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingKind {
    /// Identically zero on this half.
    Zero,
    /// Nondegenerate and symmetric.
    Symmetric,
    /// Nondegenerate and antisymmetric.
    Antisymmetric,
}

/// Symmetry report for the pairing on S± at a given n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinorPairingReport {
    pub n: usize,
    pub dim_half: usize,
    pub on_even: PairingKind,
    pub on_odd: PairingKind,
    /// For odd n the pairing instead couples S⁺ to S⁻; this flag records
    /// that the 2^(n−1)×2^(n−1) cross-pairing block is nondegenerate.
    pub cross_nondegenerate: bool,
}

/// Subsets of {0..n−1} with the given parity of cardinality, as bitmasks in
/// increasing numeric order; these index the basis monomials of Λ^even/odd N.
fn parity_subsets(n: usize, parity: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|m| (m.count_ones() as usize) % 2 == parity)
        .collect()
}

/// Sign of e_I ∧ e_J as a multiple of e_{I∪J}, or 0 when the subsets meet.
/// Counting transpositions needed to merge the ordered monomials.
fn wedge_sign(i: u32, j: u32) -> i64 {
    if i & j != 0 {
        return 0;
    }
    let mut sign = 1i64;
    for b in 0..32 {
        if j & (1 << b) != 0 {
            let higher = (i >> (b + 1)).count_ones();
            if higher % 2 == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// β multiplies Λ^k by (−1)^(k(k−1)/2) (reversal of a k-fold product).
fn beta_sign(k: usize) -> i64 {
    if (k.saturating_sub(1) * k / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// r(e_I, e_J) = (β(e_I) ∧ e_J)_n: nonzero only for J = complement of I.
fn pairing_value(n: usize, i: u32, j: u32) -> i64 {
    let full = (1u32 << n) - 1;
    if i | j != full || i & j != 0 {
        return 0;
    }
    beta_sign(i.count_ones() as usize) * wedge_sign(i, j)
}

fn gram_block(n: usize, rows: &[u32], cols: &[u32]) -> Matrix<Rat> {
    Matrix::from_fn(rows.len(), cols.len(), |a, b| {
        crate::exact::rat(pairing_value(n, rows[a], cols[b]))
    })
}

fn classify(g: &Matrix<Rat>) -> PairingKind {
    if g.is_zero() {
        return PairingKind::Zero;
    }
    let nondeg = g.rank() == g.rows();
    assert!(nondeg, "pairing on a half must be zero or nondegenerate");
    if g == &g.transpose() {
        PairingKind::Symmetric
    } else if g.transpose().scale(&-Rat::one()) == *g {
        PairingKind::Antisymmetric
    } else {
        panic!("pairing is neither symmetric nor antisymmetric")
    }
}

/// Builds S± = Λ^even/odd N for dim N = n (1 ≤ n ≤ 5) and classifies the
/// pairing: for odd n it vanishes on each half and couples the two halves
/// nondegenerately; for even n it is nondegenerate on each half, symmetric
/// exactly when n ≡ 0 mod 4 and antisymmetric otherwise.
pub fn spinor_pairing(n: usize) -> SpinorPairingReport {
    assert!((1..=5).contains(&n), "desk-scale n only");
    let evens = parity_subsets(n, 0);
    let odds = parity_subsets(n, 1);
    assert_eq!(evens.len(), 1 << (n - 1));
    assert_eq!(odds.len(), 1 << (n - 1));

    let on_even = classify(&gram_block(n, &evens, &evens));
    let on_odd = classify(&gram_block(n, &odds, &odds));
    let cross = gram_block(n, &evens, &odds);
    let cross_nondegenerate = cross.rank() == cross.rows();

    SpinorPairingReport { n, dim_half: 1 << (n - 1), on_even, on_odd, cross_nondegenerate }
}

/// Dimension identity report for Λ parity components of N₁ ⊕ N₂.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinSumReport {
    pub m: usize,
    pub n: usize,
    /// dim Λ^even(N₁⊕N₂) = dim(Λ^even⊗Λ^even) + dim(Λ^odd⊗Λ^odd).
    pub even_dims: (usize, usize),
    /// dim Λ^odd(N₁⊕N₂) = dim(Λ^even⊗Λ^odd) + dim(Λ^odd⊗Λ^even).
    pub odd_dims: (usize, usize),
}

/// Exhibits the explicit basis bijection S ↦ (S ∩ N₁, S ∩ N₂) between parity
/// monomials of Λ(N₁ ⊕ N₂) and pairs of monomials whose parities add up, and
/// returns the resulting dimension identities.
pub fn spin_sum_dims(m: usize, n: usize) -> SpinSumReport {
    assert!(m >= 1 && n >= 1);
    assert!(m + n <= 16, "desk-scale only");
    let low_mask: u32 = (1 << m) - 1;

    let mut even_pairs = 0usize;
    let mut odd_pairs = 0usize;
    let mut seen = std::collections::HashSet::new();
    for s in 0u32..1 << (m + n) {
        let s1 = s & low_mask;
        let s2 = s >> m;
        // The split is injective and recombines to s; parities add.
        assert_eq!(s1 | (s2 << m), s);
        assert!(seen.insert((s1, s2)));
        let p1 = s1.count_ones() % 2;
        let p2 = s2.count_ones() % 2;
        let total = s.count_ones() % 2;
        assert_eq!((p1 + p2) % 2, total);
        if total == 0 {
            even_pairs += 1;
        } else {
            odd_pairs += 1;
        }
    }
    assert_eq!(even_pairs + odd_pairs, 1 << (m + n));

    let half = |k: usize| 1usize << (k - 1);
    let even_dims = (even_pairs, 2 * half(m) * half(n));
    let odd_dims = (odd_pairs, 2 * half(m) * half(n));
    SpinSumReport { m, n, even_dims, odd_dims }
}

/// True when both parities of the sum decomposition match, i.e. the even and
/// odd dimension identities hold.
pub fn spin_sum_identity_holds(m: usize, n: usize) -> bool {
    let r = spin_sum_dims(m, n);
    r.even_dims.0 == r.even_dims.1 && r.odd_dims.0 == r.odd_dims.1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_sign_cases() {
        // e0 ∧ e1 = +e01, e1 ∧ e0 = −e01.
        assert_eq!(wedge_sign(0b01, 0b10), 1);
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b01, 0b01), 0);
        // (e0∧e2) ∧ e1 = −e0∧e1∧e2.
        assert_eq!(wedge_sign(0b101, 0b010), -1);
    }

    #[test]
    fn n_four_is_symmetric_on_each_half() {
        let r = spinor_pairing(4);
        assert_eq!(r.dim_half, 8);
        assert_eq!(r.on_even, PairingKind::Symmetric);
        assert_eq!(r.on_odd, PairingKind::Symmetric);
    }

    #[test]
    fn n_two_is_antisymmetric() {
        let r = spinor_pairing(2);
        assert_eq!(r.on_even, PairingKind::Antisymmetric);
        assert_eq!(r.on_odd, PairingKind::Antisymmetric);
    }

    #[test]
    fn odd_n_vanishes_on_halves_and_pairs_them() {
        for n in [1, 3, 5] {
            let r = spinor_pairing(n);
            assert_eq!(r.on_even, PairingKind::Zero);
            assert_eq!(r.on_odd, PairingKind::Zero);
            assert!(r.cross_nondegenerate);
        }
    }

    #[test]
    fn sum_identity_small_grid() {
        // (2,2): 8 = 2·2 + 2·2 on each side; (1,1): 2 = 1 + 1; (2,3): 16 = 4·4.
        for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 3), (4, 4), (1, 4)] {
            assert!(spin_sum_identity_holds(m, n), "fails at ({m},{n})");
        }
        let r = spin_sum_dims(2, 2);
        assert_eq!(r.even_dims, (8, 8));
        let r = spin_sum_dims(2, 3);
        assert_eq!(r.even_dims, (16, 16));
        assert_eq!(r.odd_dims, (16, 16));
    }
}
