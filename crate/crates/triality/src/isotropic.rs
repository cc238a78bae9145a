//! Isotropic subspace calculus on the three 6-dimensional quadrics.
//!
//! An isotropic vector s in one summand determines two maximal isotropic
//! subspaces of the neighbouring summands: A_s is the kernel of
//! multiplication by s out of the cyclic predecessor of its summand, B_s the
//! kernel out of the successor, and both are images of the reverse
//! multiplications. For an isotropic subspace U the families A_U, B_U are cut
//! out by the stacked multiplication systems. The identities verified here:
//! the 4/0 rank drop, the 1-or-3 intersection dichotomy with its product
//! criterion, the 2-or-0 polarity dichotomy, the A/B inversion identities,
//! the equivariance of the families under the outer S3 action, and the
//! vanishing bound for squares of isotropic subspaces.

use num::Zero;
use thiserror::Error;

use crate::clifford::{
    bilinear, cliff_mul, mult_matrix_from, quad, rho, rho_apply, BlockVector, RepTag,
};
use crate::exact::Rat;
use crate::groups::S3;
use crate::linalg::{Matrix, Subspace};
use crate::sample::SampleGen;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IsotropicError {
    #[error("vector is not isotropic (quad = {0})")]
    NotIsotropic(Rat),
    #[error("the zero vector spans no quadric point")]
    Zero,
    #[error("subspace is not isotropic")]
    SubspaceNotIsotropic,
    #[error("isotropic subspaces have dimension at most 4, got {0}")]
    TooLarge(usize),
    #[error("{0} does not move this summand (need an involution exchanging it)")]
    BadGroupElement(S3),
}

/// A nonzero vector with vanishing quadratic form; a point of one of the
/// three quadrics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicVector {
    vec: BlockVector,
}

impl IsotropicVector {
    pub fn new(vec: BlockVector) -> Result<IsotropicVector, IsotropicError> {
        if vec.is_zero() {
            return Err(IsotropicError::Zero);
        }
        let q = quad(&vec);
        if !q.is_zero() {
            return Err(IsotropicError::NotIsotropic(q));
        }
        Ok(IsotropicVector { vec })
    }

    pub fn vec(&self) -> &BlockVector {
        &self.vec
    }

    pub fn tag(&self) -> RepTag {
        self.vec.tag
    }

    pub fn span(&self) -> IsotropicSubspace {
        IsotropicSubspace::from_vectors(self.tag(), &[self.vec.coords()])
            .expect("a single isotropic vector spans an isotropic line")
    }
}

/// A subspace of one summand on which the quadratic form vanishes
/// identically, held in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotropicSubspace {
    tag: RepTag,
    space: Subspace,
}

impl IsotropicSubspace {
    pub fn new(tag: RepTag, space: Subspace) -> Result<IsotropicSubspace, IsotropicError> {
        assert_eq!(space.ambient_dim(), 8);
        if space.dim() > 4 {
            return Err(IsotropicError::TooLarge(space.dim()));
        }
        // quad vanishes identically iff the polarised form vanishes on all
        // basis pairs (including the diagonal).
        let basis: Vec<BlockVector> = space
            .basis_vectors()
            .iter()
            .map(|v| BlockVector::from_coords(tag, v))
            .collect();
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i..] {
                if !bilinear(x, y).is_zero() {
                    return Err(IsotropicError::SubspaceNotIsotropic);
                }
            }
        }
        Ok(IsotropicSubspace { tag, space })
    }

    pub fn from_vectors(tag: RepTag, vecs: &[Vec<Rat>]) -> Result<IsotropicSubspace, IsotropicError> {
        IsotropicSubspace::new(tag, Subspace::from_vectors(8, vecs))
    }

    pub fn tag(&self) -> RepTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_vectors(&self) -> Vec<BlockVector> {
        self.space
            .basis_vectors()
            .iter()
            .map(|v| BlockVector::from_coords(self.tag, v))
            .collect()
    }

    pub fn contains(&self, v: &BlockVector) -> bool {
        v.tag == self.tag && self.space.contains_vector(&v.coords())
    }

    pub fn intersect(&self, other: &IsotropicSubspace) -> IsotropicSubspace {
        assert_eq!(self.tag, other.tag, "intersection needs one summand");
        IsotropicSubspace::new(self.tag, self.space.intersect(&other.space))
            .expect("subspaces of isotropic spaces are isotropic")
    }
}

/// Column space of a matrix, as a subspace of the target.
fn column_space(m: &Matrix<Rat>) -> Subspace {
    Subspace::from_rows(&m.transpose())
}

/// A_s for an isotropic vector s: the kernel of multiplication by s on the
/// cyclic predecessor of its summand (rank drops to 4 on the quadric), which
/// coincides with the image of multiplication by s from the successor.
pub fn a_space(s: &IsotropicVector) -> IsotropicSubspace {
    let source = s.tag().pred();
    let kernel = mult_matrix_from(s.vec(), source).kernel();
    let image = column_space(&mult_matrix_from(s.vec(), s.tag().succ()));
    let space = Subspace::from_rows(&kernel);
    assert_eq!(space, image, "kernel and image descriptions of A_s differ");
    assert_eq!(space.dim(), 4);
    IsotropicSubspace::new(source, space).expect("A_s is isotropic")
}

/// B_s: the kernel of multiplication by s on the cyclic successor, equal to
/// the image of multiplication from the predecessor.
pub fn b_space(s: &IsotropicVector) -> IsotropicSubspace {
    let source = s.tag().succ();
    let kernel = mult_matrix_from(s.vec(), source).kernel();
    let image = column_space(&mult_matrix_from(s.vec(), s.tag().pred()));
    let space = Subspace::from_rows(&kernel);
    assert_eq!(space, image, "kernel and image descriptions of B_s differ");
    assert_eq!(space.dim(), 4);
    IsotropicSubspace::new(source, space).expect("B_s is isotropic")
}

/// (A_U, B_U) for an isotropic subspace U: kernels of the stacked
/// multiplication systems on the predecessor and successor summands, with
/// dimensions 4, 2, 1 for dim U = 1, 2, 3.
///
/// A maximal plane U is itself A_q or B_p for a unique quadric point in a
/// neighbouring summand; on that point's side the stacked kernel is its
/// span, while on the opposite side it vanishes and the family is completed
/// by the other plane of the same point: A_(A_q) = B_q and B_(B_p) = A_p.
pub fn ab_of_subspace(u: &IsotropicSubspace) -> (IsotropicSubspace, IsotropicSubspace) {
    assert!((1..=4).contains(&u.dim()), "need 1 <= dim U <= 4");
    let a = stacked_kernel(u, u.tag().pred());
    let b = stacked_kernel(u, u.tag().succ());
    if u.dim() < 4 {
        return (a, b);
    }
    match (a.dim(), b.dim()) {
        (1, 0) => {
            // U = B_p for the point p spanned by the predecessor-side kernel.
            let p = IsotropicVector::new(a.basis_vectors().pop().expect("line has a basis"))
                .expect("kernel lines consist of quadric points");
            debug_assert_eq!(b_space(&p), *u);
            let b = a_space(&p);
            (a, b)
        }
        (0, 1) => {
            // U = A_q for the point q spanned by the successor-side kernel.
            let q = IsotropicVector::new(b.basis_vectors().pop().expect("line has a basis"))
                .expect("kernel lines consist of quadric points");
            debug_assert_eq!(a_space(&q), *u);
            let a = b_space(&q);
            (a, b)
        }
        other => panic!("maximal plane with unexpected kernel dimensions {other:?}"),
    }
}

fn stacked_kernel(u: &IsotropicSubspace, source: RepTag) -> IsotropicSubspace {
    let mats: Vec<Matrix<Rat>> = u
        .basis_vectors()
        .iter()
        .map(|x| mult_matrix_from(x, source))
        .collect();
    let refs: Vec<&Matrix<Rat>> = mats.iter().collect();
    let stacked = Matrix::stack_vertical(&refs);
    IsotropicSubspace::new(source, Subspace::from_rows(&stacked.kernel()))
        .expect("A_U and B_U are isotropic")
}

/// Deterministic isotropic vector from a seed (nonzero, quad = 0).
pub fn random_isotropic(tag: RepTag, seed: u64) -> IsotropicVector {
    let mut gen = SampleGen::new(seed, "random-isotropic");
    IsotropicVector::new(gen.isotropic_vector(tag)).expect("family is isotropic and nonzero")
}

/// Rank of the squaring map μ: U ⊗ U → (id ⊗ ρ(g)) → Clifford product, for an
/// involution g moving the summand of U. The matrix has one row per basis
/// pair (x_i, x_j) and 8 columns. Rank is 0 for dim U = 1 and at most 1 for
/// dim U = 2, since squares (and with them all symmetric tensors) die.
pub fn mu_rank(u: &IsotropicSubspace, g: &S3) -> Result<usize, IsotropicError> {
    if !g.is_involution() || u.tag().acted_by(g) == u.tag() {
        return Err(IsotropicError::BadGroupElement(*g));
    }
    let basis = u.basis_vectors();
    let mut rows = Vec::new();
    for x in &basis {
        for y in &basis {
            rows.push(cliff_mul(x, &rho_apply(g, y)).coords());
        }
    }
    Ok(Matrix::from_rows(rows).rank())
}

/// Image of an isotropic subspace under ρ(g); lands in the summand g(tag).
pub fn apply_rho_subspace(g: &S3, u: &IsotropicSubspace) -> IsotropicSubspace {
    let target = u.tag().acted_by(g);
    let block = crate::clifford::block_of(&rho(g), target, u.tag());
    let vecs: Vec<Vec<Rat>> = u
        .space
        .basis_vectors()
        .iter()
        .map(|v| block.apply(v))
        .collect();
    IsotropicSubspace::from_vectors(target, &vecs)
        .expect("rho preserves the form, so images of isotropic spaces are isotropic")
}

/// Seeded isotropic subspace of the requested dimension: lines are spans,
/// planes come from the polarity dichotomy (A_s ∩ A_s' with ⟨s,s'⟩ = 0),
/// 3-spaces from the product criterion (A_s ∩ B_t with s·t = 0), and
/// 4-spaces are the maximal planes A_s themselves.
pub fn random_isotropic_subspace(
    gen: &mut SampleGen,
    tag: RepTag,
    dim: usize,
) -> IsotropicSubspace {
    match dim {
        1 => IsotropicVector::new(gen.isotropic_vector(tag))
            .expect("family is isotropic")
            .span(),
        2 => loop {
            let (s, sp) = gen.isotropic_orthogonal_pair(tag.succ());
            let a1 = a_space(&IsotropicVector::new(s).unwrap());
            let a2 = a_space(&IsotropicVector::new(sp).unwrap());
            let meet = a1.intersect(&a2);
            if meet.dim() == 2 {
                return meet;
            }
        },
        3 => {
            let (s, t) = product_zero_pair(gen, tag.succ());
            let meet = a_space(&s).intersect(&b_space(&t));
            assert_eq!(meet.dim(), 3);
            meet
        }
        4 => a_space(
            &IsotropicVector::new(gen.isotropic_vector(tag.succ())).expect("family is isotropic"),
        ),
        d => panic!("no isotropic subspaces of dimension {d}"),
    }
}

/// Seeded pair s (in the given summand) and t (in its successor) with
/// s·t = 0: t is drawn from B_s, which consists of isotropic vectors.
pub fn product_zero_pair(gen: &mut SampleGen, tag: RepTag) -> (IsotropicVector, IsotropicVector) {
    let s = IsotropicVector::new(gen.isotropic_vector(tag)).expect("family is isotropic");
    let bs = b_space(&s);
    let t = BlockVector::from_coords(tag.succ(), &gen.vector_in(bs.space()));
    let t = IsotropicVector::new(t).expect("members of B_s are isotropic");
    debug_assert!(cliff_mul(s.vec(), t.vec()).is_zero());
    (s, t)
}

/// Seeded pair s, t in successive summands with s·t ≠ 0.
pub fn product_nonzero_pair(
    gen: &mut SampleGen,
    tag: RepTag,
) -> (IsotropicVector, IsotropicVector) {
    loop {
        let s = IsotropicVector::new(gen.isotropic_vector(tag)).expect("family is isotropic");
        let t = IsotropicVector::new(gen.isotropic_vector(tag.succ())).expect("family is isotropic");
        if !cliff_mul(s.vec(), t.vec()).is_zero() {
            return (s, t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{s0, v0};
    use crate::exact::rat;

    #[test]
    fn unit_vectors_are_rejected() {
        // s0 has quad = 1, so it is not a quadric point.
        assert_eq!(
            IsotropicVector::new(s0()),
            Err(IsotropicError::NotIsotropic(rat(1)))
        );
        assert_eq!(
            IsotropicVector::new(BlockVector::zero(RepTag::V)),
            Err(IsotropicError::Zero)
        );
        // A non-isotropic plane is rejected.
        assert!(IsotropicSubspace::from_vectors(RepTag::V, &[v0().coords()]).is_err());
    }

    #[test]
    fn a_and_b_spaces_have_dimension_four() {
        for tag in RepTag::ALL {
            for seed in 0..8 {
                let s = random_isotropic(tag, seed);
                let a = a_space(&s);
                let b = b_space(&s);
                assert_eq!(a.dim(), 4);
                assert_eq!(b.dim(), 4);
                assert_eq!(a.tag(), tag.pred());
                assert_eq!(b.tag(), tag.succ());
            }
        }
    }

    #[test]
    fn intersection_dichotomy_one_or_three() {
        let mut gen = SampleGen::new(2, "dichotomy-unit");
        // s ∈ S⁺, t ∈ S⁻, both A_s and B_t inside V.
        for _ in 0..10 {
            let (s, t) = product_nonzero_pair(&mut gen, RepTag::Splus);
            let meet = a_space(&s).intersect(&b_space(&t));
            assert_eq!(meet.dim(), 1);
            // The line is spanned by s·t.
            let st = cliff_mul(s.vec(), t.vec());
            assert!(meet.contains(&st));
        }
        for _ in 0..10 {
            let (s, t) = product_zero_pair(&mut gen, RepTag::Splus);
            let meet = a_space(&s).intersect(&b_space(&t));
            assert_eq!(meet.dim(), 3);
        }
    }

    #[test]
    fn product_zero_four_way_equivalence() {
        let mut gen = SampleGen::new(3, "prod0-unit");
        for _ in 0..10 {
            let (s, t) = product_zero_pair(&mut gen, RepTag::Splus);
            assert!(cliff_mul(s.vec(), t.vec()).is_zero());
            assert!(a_space(&t).contains(s.vec()));
            assert!(b_space(&s).contains(t.vec()));
            assert_eq!(a_space(&s).intersect(&b_space(&t)).dim(), 3);
        }
        for _ in 0..10 {
            let (s, t) = product_nonzero_pair(&mut gen, RepTag::Splus);
            assert!(!a_space(&t).contains(s.vec()));
            assert!(!b_space(&s).contains(t.vec()));
            assert_eq!(a_space(&s).intersect(&b_space(&t)).dim(), 1);
        }
    }

    #[test]
    fn polarity_dichotomy_two_or_zero() {
        let mut gen = SampleGen::new(4, "polarity-unit");
        for _ in 0..10 {
            let (s, sp) = gen.isotropic_orthogonal_pair(RepTag::Splus);
            let a1 = a_space(&IsotropicVector::new(s).unwrap());
            let a2 = a_space(&IsotropicVector::new(sp).unwrap());
            assert_eq!(a1.intersect(&a2).dim(), 2);
        }
        for _ in 0..10 {
            let (s, sp) = gen.isotropic_nonorthogonal_pair(RepTag::Splus);
            let a1 = a_space(&IsotropicVector::new(s).unwrap());
            let a2 = a_space(&IsotropicVector::new(sp).unwrap());
            assert_eq!(a1.intersect(&a2).dim(), 0);
        }
    }

    #[test]
    fn ab_dimension_table() {
        let mut gen = SampleGen::new(5, "ab-dims-unit");
        for tag in RepTag::ALL {
            for (dim, expect) in [(1, 4), (2, 2), (3, 1)] {
                let u = random_isotropic_subspace(&mut gen, tag, dim);
                let (a, b) = ab_of_subspace(&u);
                assert_eq!((a.dim(), b.dim()), (expect, expect), "dim U = {dim}");
            }
        }
    }

    #[test]
    fn maximal_planes_collapse_one_side() {
        let mut gen = SampleGen::new(6, "maximal-unit");
        for _ in 0..5 {
            let s = IsotropicVector::new(gen.isotropic_vector(RepTag::Splus)).unwrap();
            // U = A_s: A_U = B_s and B_U = span(s).
            let u = a_space(&s);
            let (a, b) = ab_of_subspace(&u);
            assert_eq!(a, b_space(&s));
            assert_eq!(b, s.span());

            // U = B_t: A_U = span(t) and B_U = A_t.
            let t = IsotropicVector::new(gen.isotropic_vector(RepTag::Sminus)).unwrap();
            let u = b_space(&t);
            let (a, b) = ab_of_subspace(&u);
            assert_eq!(a, t.span());
            assert_eq!(b, a_space(&t));
        }
    }

    #[test]
    fn ab1_inversion_identities() {
        let mut gen = SampleGen::new(7, "ab1-unit");
        for tag in RepTag::ALL {
            for dim in [1usize, 2, 4] {
                let u = random_isotropic_subspace(&mut gen, tag, dim);
                let (a_u, b_u) = ab_of_subspace(&u);
                let (_, b_of_a) = ab_of_subspace(&a_u);
                let (a_of_b, _) = ab_of_subspace(&b_u);
                assert_eq!(a_of_b, u, "A_(B_U) = U at dim {dim}");
                assert_eq!(b_of_a, u, "B_(A_U) = U at dim {dim}");
                let (a_of_a, _) = ab_of_subspace(&a_u);
                let (_, b_of_b) = ab_of_subspace(&b_u);
                assert_eq!(a_of_a, b_u, "A_(A_U) = B_U at dim {dim}");
                assert_eq!(b_of_b, a_u, "B_(B_U) = A_U at dim {dim}");
            }
        }
    }

    #[test]
    fn ab2_two_dim_pairing() {
        let mut gen = SampleGen::new(8, "ab2-unit");
        for tag in RepTag::ALL {
            for _ in 0..5 {
                let u = random_isotropic_subspace(&mut gen, tag, 2);
                let (a_u, b_u) = ab_of_subspace(&u);
                // Multiplication vanishes on U ⊗ B_U by construction; the
                // lemma then forces the pair (U, R) to invert.
                for x in u.basis_vectors() {
                    for r in b_u.basis_vectors() {
                        assert!(cliff_mul(&x, &r).is_zero());
                    }
                }
                let (a_of_r, _) = ab_of_subspace(&b_u);
                assert_eq!(a_of_r, u);
                // And with R = A_U the other branch: U = B_R.
                for x in u.basis_vectors() {
                    for r in a_u.basis_vectors() {
                        assert!(cliff_mul(&x, &r).is_zero());
                    }
                }
                let (_, b_of_r) = ab_of_subspace(&a_u);
                assert_eq!(b_of_r, u);
            }
        }
    }

    #[test]
    fn ab3_sign_rule() {
        let mut gen = SampleGen::new(9, "ab3-unit");
        for g in S3::ALL {
            for tag in RepTag::ALL {
                for dim in [1usize, 2] {
                    let u = random_isotropic_subspace(&mut gen, tag, dim);
                    let (a_u, b_u) = ab_of_subspace(&u);
                    let gu = apply_rho_subspace(&g, &u);
                    let (a_gu, b_gu) = ab_of_subspace(&gu);
                    let ga = apply_rho_subspace(&g, &a_u);
                    let gb = apply_rho_subspace(&g, &b_u);
                    if g.sign() == 1 {
                        assert_eq!(ga, a_gu, "gA_U = A_gU for {g}");
                        assert_eq!(gb, b_gu, "gB_U = B_gU for {g}");
                    } else {
                        assert_eq!(ga, b_gu, "gA_U = B_gU for {g}");
                        assert_eq!(gb, a_gu, "gB_U = A_gU for {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn ab_sequences_are_exact() {
        let mut gen = SampleGen::new(10, "abseq-unit");
        for tag in RepTag::ALL {
            for _ in 0..10 {
                let s = IsotropicVector::new(gen.isotropic_vector(tag)).unwrap();
                // pred --(·s)--> succ has kernel A_s and image B_s.
                let m = mult_matrix_from(s.vec(), tag.pred());
                let a = a_space(&s);
                let b = b_space(&s);
                assert_eq!(Subspace::from_rows(&m.kernel()), *a.space());
                assert_eq!(column_space(&m), *b.space());
                assert_eq!(a.dim() + b.dim(), 8);
            }
        }
    }

    #[test]
    fn mu_rank_bounds() {
        let mut gen = SampleGen::new(11, "mu-unit");
        for tag in RepTag::ALL {
            let movers: Vec<S3> = S3::INVOLUTIONS
                .into_iter()
                .filter(|g| tag.acted_by(g) != tag)
                .collect();
            assert_eq!(movers.len(), 2);
            for g in movers {
                for _ in 0..5 {
                    let line = random_isotropic_subspace(&mut gen, tag, 1);
                    assert_eq!(mu_rank(&line, &g).unwrap(), 0);
                    let plane = random_isotropic_subspace(&mut gen, tag, 2);
                    assert!(mu_rank(&plane, &g).unwrap() <= 1);
                    // Symmetric tensors are annihilated: μ(x⊗y) = −μ(y⊗x).
                    let basis = plane.basis_vectors();
                    let xy = cliff_mul(&basis[0], &rho_apply(&g, &basis[1]));
                    let yx = cliff_mul(&basis[1], &rho_apply(&g, &basis[0]));
                    assert_eq!(xy, yx.neg());
                    let sq = cliff_mul(&basis[0], &rho_apply(&g, &basis[0]));
                    assert!(sq.is_zero());
                }
            }
        }
    }

    #[test]
    fn mu_rank_rejects_non_movers() {
        let line = random_isotropic(RepTag::V, 1).span();
        assert!(mu_rank(&line, &S3::Tau).is_err());
        assert!(mu_rank(&line, &S3::Id).is_err());
        // σ preserves V.
        assert!(mu_rank(&line, &S3::Sigma).is_err());
        assert!(mu_rank(&line, &S3::SigmaTau).is_ok());
    }

    #[test]
    fn seeded_vectors_are_reproducible_and_spread() {
        let v1 = random_isotropic(RepTag::Splus, 1);
        let v2 = random_isotropic(RepTag::Splus, 1);
        assert_eq!(v1, v2);
        let mut distinct = std::collections::HashSet::new();
        for seed in 1..=100u64 {
            distinct.insert(format!("{:?}", random_isotropic(RepTag::Splus, seed)));
        }
        assert!(distinct.len() >= 95, "only {} distinct vectors", distinct.len());
    }

    #[test]
    fn seed_one_regression_vector() {
        // Frozen output of the seeded sampler; guards against accidental
        // changes to the generation scheme. Recorded on first run; the last
        // four coordinates are [det a, 0, r, 1] by construction.
        let v = random_isotropic(RepTag::V, 1);
        let c: Vec<i64> = v
            .vec()
            .coords()
            .iter()
            .map(|r| {
                assert!(num::One::is_one(r.denom()));
                use num::ToPrimitive;
                r.numer().to_i64().unwrap()
            })
            .collect();
        assert_eq!(c, vec![2, 2, 2, 1, -2, 0, -3, 1]);
    }
}
