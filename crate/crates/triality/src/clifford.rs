//! The 2×2-block model of the three 8-dimensional representations of Spin(8).
//!
//! The standard representation is V = Hom(A,B) ⊕ Hom(C,D) for oriented planes
//! A, B, C, D, carrying the quadratic form (a, b) ↦ det a − det b, and the
//! half-spinor spaces are S⁺ = Hom(B,C) ⊕ Hom(A,D) and S⁻ = Hom(C,A) ⊕
//! Hom(B,D) with the same form. Between any two of the three spaces there is a
//! Clifford multiplication into the third. With ū the adjugate of a 2×2
//! matrix u, the three products are pinned here as
//!
//! ```text
//!   V ⊗ S⁺ → S⁻ : (a,b)(x,y) = (ā x̄ + ȳ b,  b x + y ā)
//!   V ⊗ S⁻ → S⁺ : (a,b)(z,w) = (z̄ ā − b̄ w,  w a − b z̄)
//!   S⁺ ⊗ S⁻ → V : (x,y)(z,w) = (x̄ z̄ − w̄ y,  w x̄ − y z)
//! ```
//!
//! The first is the only composite-sum expression with all plus signs; the
//! signs in the other two are not free: they are forced by requiring
//! v·(v·s) = q(v)·s and the three-way symmetry of the trilinear form
//! c(v,s,t) = ⟨v·s, t⟩ = ⟨v·t, s⟩ = ⟨s·t, v⟩ (the naive all-plus variants
//! fail both). With unit vectors v₀ = s₀ = t₀ = (1, 0) one gets t₀ = v₀·s₀
//! and the split octonion product (a,b)(c,d) = (ac + d̄b, da + bc̄) on V.
//!
//! The order-3 outer symmetry is realised by `rho`: each involution of the
//! symmetry group acts on the two summands it exchanges by Clifford
//! multiplication with the corresponding unit vector, and on the summand it
//! preserves by negated hyperplane reflection (fixing the unit vector and
//! negating its orthogonal complement — the sign that makes `rho` a
//! homomorphism preserving the trilinear form).

use num::{One, Zero};

use crate::exact::{rat, Rat};
use crate::groups::S3;
use crate::linalg::Matrix;

/// Which of the three 8-dimensional representations a vector lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RepTag {
    V,
    Splus,
    Sminus,
}

impl RepTag {
    pub const ALL: [RepTag; 3] = [RepTag::V, RepTag::Splus, RepTag::Sminus];

    pub fn index(&self) -> usize {
        match self {
            RepTag::V => 0,
            RepTag::Splus => 1,
            RepTag::Sminus => 2,
        }
    }

    pub fn from_index(i: usize) -> RepTag {
        RepTag::ALL[i]
    }

    /// Cyclic successor V → S⁺ → S⁻ → V.
    pub fn succ(&self) -> RepTag {
        RepTag::from_index((self.index() + 1) % 3)
    }

    pub fn pred(&self) -> RepTag {
        RepTag::from_index((self.index() + 2) % 3)
    }

    /// The representation that is neither `a` nor `b`.
    pub fn third(a: RepTag, b: RepTag) -> RepTag {
        assert_ne!(a, b, "two distinct representations required");
        RepTag::from_index(3 - a.index() - b.index())
    }

    /// Image under the slot action of S3 (τ is the cyclic successor map).
    pub fn acted_by(&self, g: &S3) -> RepTag {
        RepTag::from_index(g.apply(self.index()))
    }

    pub fn name(&self) -> &'static str {
        match self {
            RepTag::V => "V",
            RepTag::Splus => "S+",
            RepTag::Sminus => "S-",
        }
    }
}

/// A 2×2 rational matrix, one block of a [`BlockVector`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block2 {
    pub m: [[Rat; 2]; 2],
}

impl Block2 {
    pub fn new(m00: Rat, m01: Rat, m10: Rat, m11: Rat) -> Block2 {
        Block2 { m: [[m00, m01], [m10, m11]] }
    }

    pub fn from_ints(m00: i64, m01: i64, m10: i64, m11: i64) -> Block2 {
        Block2::new(rat(m00), rat(m01), rat(m10), rat(m11))
    }

    pub fn zero() -> Block2 {
        Block2::from_ints(0, 0, 0, 0)
    }

    pub fn identity() -> Block2 {
        Block2::from_ints(1, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    /// Transpose of the matrix of signed cofactors: [[d, −b], [−c, a]].
    /// For 2×2 matrices this is a linear involution with m·m̄ = det(m)·1.
    pub fn adjugate(&self) -> Block2 {
        Block2::new(
            self.m[1][1].clone(),
            -self.m[0][1].clone(),
            -self.m[1][0].clone(),
            self.m[0][0].clone(),
        )
    }

    pub fn det(&self) -> Rat {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> Rat {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn mul(&self, rhs: &Block2) -> Block2 {
        let e = |i: usize, j: usize| -> Rat {
            &self.m[i][0] * &rhs.m[0][j] + &self.m[i][1] * &rhs.m[1][j]
        };
        Block2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add(&self, rhs: &Block2) -> Block2 {
        Block2::new(
            &self.m[0][0] + &rhs.m[0][0],
            &self.m[0][1] + &rhs.m[0][1],
            &self.m[1][0] + &rhs.m[1][0],
            &self.m[1][1] + &rhs.m[1][1],
        )
    }

    pub fn sub(&self, rhs: &Block2) -> Block2 {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Block2 {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> Block2 {
        Block2::new(
            c * &self.m[0][0],
            c * &self.m[0][1],
            c * &self.m[1][0],
            c * &self.m[1][1],
        )
    }
}

/// An element of V, S⁺ or S⁻: a pair of 2×2 blocks plus the representation
/// tag that governs which Clifford multiplications are legal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockVector {
    pub tag: RepTag,
    pub first: Block2,
    pub second: Block2,
}

impl BlockVector {
    pub fn new(tag: RepTag, first: Block2, second: Block2) -> BlockVector {
        BlockVector { tag, first, second }
    }

    pub fn zero(tag: RepTag) -> BlockVector {
        BlockVector::new(tag, Block2::zero(), Block2::zero())
    }

    /// The distinguished unit vector (1, 0) of the given summand; v₀, s₀ and
    /// t₀ are these for V, S⁺, S⁻ respectively, and t₀ = v₀·s₀.
    pub fn unit(tag: RepTag) -> BlockVector {
        BlockVector::new(tag, Block2::identity(), Block2::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    pub fn add(&self, rhs: &BlockVector) -> BlockVector {
        assert_eq!(self.tag, rhs.tag);
        BlockVector::new(self.tag, self.first.add(&rhs.first), self.second.add(&rhs.second))
    }

    pub fn sub(&self, rhs: &BlockVector) -> BlockVector {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> BlockVector {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> BlockVector {
        BlockVector::new(self.tag, self.first.scale(c), self.second.scale(c))
    }

    /// Coordinates in the standard basis of matrix units, first block then
    /// second block, each row-major.
    pub fn coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(8);
        for b in [&self.first, &self.second] {
            for i in 0..2 {
                for j in 0..2 {
                    out.push(b.m[i][j].clone());
                }
            }
        }
        out
    }

    pub fn from_coords(tag: RepTag, c: &[Rat]) -> BlockVector {
        assert_eq!(c.len(), 8);
        BlockVector::new(
            tag,
            Block2::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()),
            Block2::new(c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()),
        )
    }

    /// j-th standard basis vector of the summand, 0 ≤ j < 8.
    pub fn basis(tag: RepTag, j: usize) -> BlockVector {
        let mut c = vec![Rat::zero(); 8];
        c[j] = Rat::one();
        BlockVector::from_coords(tag, &c)
    }
}

pub fn v0() -> BlockVector {
    BlockVector::unit(RepTag::V)
}

pub fn s0() -> BlockVector {
    BlockVector::unit(RepTag::Splus)
}

pub fn t0() -> BlockVector {
    BlockVector::unit(RepTag::Sminus)
}

/// The quadratic form det(first) − det(second), the same formula on all
/// three summands.
pub fn quad(x: &BlockVector) -> Rat {
    x.first.det() - x.second.det()
}

/// Polarisation of `quad`: ⟨u, v⟩ = ½ trace(u₁ v̄₁) − ½ trace(u₂ v̄₂),
/// so that ⟨x, x⟩ = quad(x). Requires equal tags.
pub fn bilinear(x: &BlockVector, y: &BlockVector) -> Rat {
    assert_eq!(x.tag, y.tag, "polarised form needs both vectors in one summand");
    let half = crate::exact::ratio(1, 2);
    &half * &x.first.mul(&y.first.adjugate()).trace()
        - &half * &x.second.mul(&y.second.adjugate()).trace()
}

fn mul_v_splus(v: &BlockVector, s: &BlockVector) -> BlockVector {
    let (a, b) = (&v.first, &v.second);
    let (x, y) = (&s.first, &s.second);
    BlockVector::new(
        RepTag::Sminus,
        a.adjugate().mul(&x.adjugate()).add(&y.adjugate().mul(b)),
        b.mul(x).add(&y.mul(&a.adjugate())),
    )
}

fn mul_v_sminus(v: &BlockVector, t: &BlockVector) -> BlockVector {
    let (a, b) = (&v.first, &v.second);
    let (z, w) = (&t.first, &t.second);
    BlockVector::new(
        RepTag::Splus,
        z.adjugate().mul(&a.adjugate()).sub(&b.adjugate().mul(w)),
        w.mul(a).sub(&b.mul(&z.adjugate())),
    )
}

fn mul_splus_sminus(s: &BlockVector, t: &BlockVector) -> BlockVector {
    let (x, y) = (&s.first, &s.second);
    let (z, w) = (&t.first, &t.second);
    BlockVector::new(
        RepTag::V,
        x.adjugate().mul(&z.adjugate()).sub(&w.adjugate().mul(y)),
        w.mul(&x.adjugate()).sub(&y.mul(z)),
    )
}

/// Clifford multiplication of two vectors in distinct representations,
/// landing in the third. Symmetric in its arguments. Panics when both
/// arguments carry the same tag.
pub fn cliff_mul(x: &BlockVector, y: &BlockVector) -> BlockVector {
    match (x.tag, y.tag) {
        (RepTag::V, RepTag::Splus) => mul_v_splus(x, y),
        (RepTag::Splus, RepTag::V) => mul_v_splus(y, x),
        (RepTag::V, RepTag::Sminus) => mul_v_sminus(x, y),
        (RepTag::Sminus, RepTag::V) => mul_v_sminus(y, x),
        (RepTag::Splus, RepTag::Sminus) => mul_splus_sminus(x, y),
        (RepTag::Sminus, RepTag::Splus) => mul_splus_sminus(y, x),
        (a, b) => panic!(
            "Clifford multiplication needs two distinct representations, got {} and {}",
            a.name(),
            b.name()
        ),
    }
}

/// The trilinear form c(v, s, t). All three evaluation orders
/// ⟨v·s, t⟩, ⟨v·t, s⟩ and ⟨s·t, v⟩ agree; this is asserted on every call and
/// the common value returned.
pub fn trilinear(v: &BlockVector, s: &BlockVector, t: &BlockVector) -> Rat {
    assert_eq!(v.tag, RepTag::V);
    assert_eq!(s.tag, RepTag::Splus);
    assert_eq!(t.tag, RepTag::Sminus);
    let via_s = bilinear(&cliff_mul(v, s), t);
    let via_t = bilinear(&cliff_mul(v, t), s);
    let via_v = bilinear(&cliff_mul(s, t), v);
    assert_eq!(via_s, via_t, "trilinear symmetry violated");
    assert_eq!(via_s, via_v, "trilinear symmetry violated");
    via_s
}

/// 8×8 matrix of y ↦ cliff_mul(x, y) on the `source` representation (with
/// `source ≠ tag(x)`), in standard bases; columns are images of basis
/// vectors, acting on coordinate columns.
pub fn mult_matrix_from(x: &BlockVector, source: RepTag) -> Matrix<Rat> {
    assert_ne!(x.tag, source);
    let mut m = Matrix::zeros(8, 8);
    for j in 0..8 {
        let img = cliff_mul(x, &BlockVector::basis(source, j));
        for (i, c) in img.coords().into_iter().enumerate() {
            *m.at_mut(i, j) = c;
        }
    }
    m
}

/// Multiplication by `x` from the cyclic successor of its summand into the
/// third; det(mult_matrix(x)) = −quad(x)⁴, so the map degenerates (to rank 4)
/// exactly on the quadric.
pub fn mult_matrix(x: &BlockVector) -> Matrix<Rat> {
    mult_matrix_from(x, x.tag.succ())
}

/// Split octonion product on V, unital with unit v₀.
pub fn oct_mul(x: &BlockVector, y: &BlockVector) -> BlockVector {
    assert_eq!(x.tag, RepTag::V);
    assert_eq!(y.tag, RepTag::V);
    let (a, b) = (&x.first, &x.second);
    let (c, d) = (&y.first, &y.second);
    BlockVector::new(
        RepTag::V,
        a.mul(c).add(&d.adjugate().mul(b)),
        d.mul(a).add(&b.mul(&c.adjugate())),
    )
}

/// Octonion conjugation x ↦ 2⟨x, v₀⟩v₀ − x = (ā, −b); x·x̄ = quad(x)·v₀.
pub fn oct_conj(x: &BlockVector) -> BlockVector {
    assert_eq!(x.tag, RepTag::V);
    BlockVector::new(RepTag::V, x.first.adjugate(), x.second.neg())
}

/// An element of the 24-dimensional direct sum V ⊕ S⁺ ⊕ S⁻.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChevalleyElement {
    pub v: BlockVector,
    pub s: BlockVector,
    pub t: BlockVector,
}

impl ChevalleyElement {
    pub fn new(v: BlockVector, s: BlockVector, t: BlockVector) -> ChevalleyElement {
        assert_eq!(v.tag, RepTag::V);
        assert_eq!(s.tag, RepTag::Splus);
        assert_eq!(t.tag, RepTag::Sminus);
        ChevalleyElement { v, s, t }
    }

    pub fn from_summand(x: &BlockVector) -> ChevalleyElement {
        let mut parts = [
            BlockVector::zero(RepTag::V),
            BlockVector::zero(RepTag::Splus),
            BlockVector::zero(RepTag::Sminus),
        ];
        parts[x.tag.index()] = x.clone();
        let [v, s, t] = parts;
        ChevalleyElement { v, s, t }
    }

    pub fn coords(&self) -> Vec<Rat> {
        let mut out = self.v.coords();
        out.extend(self.s.coords());
        out.extend(self.t.coords());
        out
    }

    pub fn from_coords(c: &[Rat]) -> ChevalleyElement {
        assert_eq!(c.len(), 24);
        ChevalleyElement {
            v: BlockVector::from_coords(RepTag::V, &c[0..8]),
            s: BlockVector::from_coords(RepTag::Splus, &c[8..16]),
            t: BlockVector::from_coords(RepTag::Sminus, &c[16..24]),
        }
    }

    pub fn summand(&self, tag: RepTag) -> &BlockVector {
        match tag {
            RepTag::V => &self.v,
            RepTag::Splus => &self.s,
            RepTag::Sminus => &self.t,
        }
    }
}

/// The involution of V ⊕ S⁺ ⊕ S⁻ attached to a unit vector w (quad(w) = 1):
/// Clifford multiplication by w between the two summands it exchanges, and
/// x ↦ 2⟨x, w⟩w − x on the summand of w itself.
pub fn chevalley_involution(w: &BlockVector) -> Matrix<Rat> {
    assert_eq!(quad(w), Rat::one(), "involution requires a unit vector");
    let mut m = Matrix::zeros(24, 24);
    for src in RepTag::ALL {
        for j in 0..8 {
            let e = BlockVector::basis(src, j);
            let img = if src == w.tag {
                let c = rat(2) * bilinear(&e, w);
                w.scale(&c).sub(&e)
            } else {
                cliff_mul(w, &e)
            };
            let row_base = img.tag.index() * 8;
            let col = src.index() * 8 + j;
            for (i, c) in img.coords().into_iter().enumerate() {
                *m.at_mut(row_base + i, col) = c;
            }
        }
    }
    m
}

/// The splitting ρ: S3 → O(V ⊕ S⁺ ⊕ S⁻) determined by the units v₀, s₀, t₀.
/// σ, στ and στ² are the involutions attached to v₀, s₀ and t₀, and the
/// 3-cycles are products of those; ρ is a group homomorphism, each image is
/// orthogonal for the direct-sum form, and the trilinear form is invariant.
pub fn rho(u: &S3) -> Matrix<Rat> {
    match u {
        S3::Id => Matrix::identity(24),
        S3::Sigma => chevalley_involution(&v0()),
        S3::SigmaTau => chevalley_involution(&s0()),
        S3::SigmaTauSq => chevalley_involution(&t0()),
        // τ = σ·στ and τ² = σ·στ².
        S3::Tau => rho(&S3::Sigma).mul(&rho(&S3::SigmaTau)),
        S3::TauSq => rho(&S3::Sigma).mul(&rho(&S3::SigmaTauSq)),
    }
}

/// Apply ρ(u) to a single-summand vector; the image lives in the summand
/// u(tag).
pub fn rho_apply(u: &S3, x: &BlockVector) -> BlockVector {
    let m = rho(u);
    let img = m.apply(&ChevalleyElement::from_summand(x).coords());
    let out = ChevalleyElement::from_coords(&img);
    let target = x.tag.acted_by(u);
    for tag in RepTag::ALL {
        if tag != target {
            assert!(out.summand(tag).is_zero());
        }
    }
    out.summand(target).clone()
}

/// The 8×8 block of a 24×24 map sending the `source` summand into the
/// `target` summand.
pub fn block_of(m: &Matrix<Rat>, target: RepTag, source: RepTag) -> Matrix<Rat> {
    assert_eq!((m.rows(), m.cols()), (24, 24));
    Matrix::from_fn(8, 8, |i, j| {
        m.at(target.index() * 8 + i, source.index() * 8 + j).clone()
    })
}

/// Gram matrix of the polarised form on one summand.
pub fn gram(tag: RepTag) -> Matrix<Rat> {
    Matrix::from_fn(8, 8, |i, j| {
        bilinear(&BlockVector::basis(tag, i), &BlockVector::basis(tag, j))
    })
}

/// Whether an 8×8 matrix preserves the quadratic form.
pub fn is_orthogonal(m: &Matrix<Rat>, tag: RepTag) -> bool {
    let g = gram(tag);
    m.transpose().mul(&g).mul(m) == g
}

/// The defining test for triality-compatible orthogonal triples: a, b, c all
/// preserve the form and a(u)·b(v) = c(u·v) for the octonion product, checked
/// on all 64 pairs of basis vectors (enough, by bilinearity).
pub fn is_triality_triple(a: &Matrix<Rat>, b: &Matrix<Rat>, c: &Matrix<Rat>) -> bool {
    for m in [a, b, c] {
        if !is_orthogonal(m, RepTag::V) {
            return false;
        }
    }
    for i in 0..8 {
        let u = BlockVector::basis(RepTag::V, i);
        let au = BlockVector::from_coords(RepTag::V, &a.apply(&u.coords()));
        for j in 0..8 {
            let v = BlockVector::basis(RepTag::V, j);
            let bv = BlockVector::from_coords(RepTag::V, &b.apply(&v.coords()));
            let lhs = oct_mul(&au, &bv);
            let rhs = BlockVector::from_coords(RepTag::V, &c.apply(&oct_mul(&u, &v).coords()));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The triple (a, b, c) attached to a summand-preserving algebra
/// automorphism g of V ⊕ S⁺ ⊕ S⁻: c is the V-block, while the spinor blocks
/// are transported to the octonions through the unit identifications,
/// a(u) = t₀·(g₋(t₀)·g_V(u)) and b(v) = s₀·(g₊(s₀)·g_V(v)). The result
/// satisfies a(u)b(v) = c(uv).
pub fn triple_of_automorphism(g: &Matrix<Rat>) -> (Matrix<Rat>, Matrix<Rat>, Matrix<Rat>) {
    assert_eq!((g.rows(), g.cols()), (24, 24));
    for src in RepTag::ALL {
        for dst in RepTag::ALL {
            if src != dst {
                assert!(
                    block_of(g, dst, src).is_zero(),
                    "automorphism must preserve the three summands"
                );
            }
        }
    }
    let g_v = block_of(g, RepTag::V, RepTag::V);
    let g_plus = block_of(g, RepTag::Splus, RepTag::Splus);
    let g_minus = block_of(g, RepTag::Sminus, RepTag::Sminus);

    let gm_t0 = BlockVector::from_coords(RepTag::Sminus, &g_minus.apply(&t0().coords()));
    let gp_s0 = BlockVector::from_coords(RepTag::Splus, &g_plus.apply(&s0().coords()));
    let a = mult_matrix_from(&t0(), RepTag::Splus)
        .mul(&mult_matrix_from(&gm_t0, RepTag::V))
        .mul(&g_v);
    let b = mult_matrix_from(&s0(), RepTag::Sminus)
        .mul(&mult_matrix_from(&gp_s0, RepTag::V))
        .mul(&g_v);
    (a, b, g_v)
}

/// A triality triple from a pair of unit vectors w₁, w₂ ∈ V: the product of
/// their Chevalley involutions preserves each summand, and its triple
/// satisfies the octonion identity.
pub fn triality_triple_from_units(
    w1: &BlockVector,
    w2: &BlockVector,
) -> (Matrix<Rat>, Matrix<Rat>, Matrix<Rat>) {
    assert_eq!(w1.tag, RepTag::V);
    assert_eq!(w2.tag, RepTag::V);
    triple_of_automorphism(&chevalley_involution(w1).mul(&chevalley_involution(w2)))
}

/// The four central summand-preserving automorphisms: blockwise signs
/// (ε_V, ε₊, ε₋) with ε_V ε₊ ε₋ = +1.
pub fn center_automorphisms() -> Vec<Matrix<Rat>> {
    [(1i64, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        .into_iter()
        .map(|(ev, ep, em)| {
            let mut m = Matrix::zeros(24, 24);
            for (k, sign) in [ev, ep, em].into_iter().enumerate() {
                for i in 0..8 {
                    *m.at_mut(8 * k + i, 8 * k + i) = rat(sign);
                }
            }
            m
        })
        .collect()
}

/// The four central elements (ε_V, ε_+, ε_−) with ε's = ±1 multiplying to +1,
/// as triples of 8×8 matrices.
pub fn center_triples() -> Vec<(Matrix<Rat>, Matrix<Rat>, Matrix<Rat>)> {
    let id = Matrix::<Rat>::identity(8);
    let neg = id.scale(&-Rat::one());
    let pick = |s: i64| if s > 0 { id.clone() } else { neg.clone() };
    [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        .into_iter()
        .map(|(a, b, c)| (pick(a), pick(b), pick(c)))
        .collect()
}
