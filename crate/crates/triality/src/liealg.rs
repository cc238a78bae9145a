//! The D4 root system and the outer S3 action on so(8).
//!
//! so(8) is modelled combinatorially as a Cartan subalgebra with orthonormal
//! basis e₁..e₄ plus one root space per root ±e_i ± e_j; that is all the
//! dimension computations need. The outer action permutes the outer nodes of
//! the branched diagram with simple roots f₁ = e₁−e₂, f₀ = e₂−e₃,
//! f₂ = e₃−e₄, f₃ = e₃+e₄ (f₀ the centre node), and a fixed root space
//! contributes eigenvalue +1 — the lift convention under which the
//! decompositions below reproduce 21 ⊕ 7 for an involution and
//! 14 ⊕ 7 ⊕ 7 for a 3-cycle.

use num::{ToPrimitive, Zero};

use crate::exact::{rat, Eis, Rat};
use crate::groups::S3;
use crate::linalg::Matrix;

/// A root ±e_i ± e_j of so(8), stored by its four integer coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Root(pub [i64; 4]);

impl Root {
    pub fn new(c: [i64; 4]) -> Root {
        let nonzero: Vec<i64> = c.iter().copied().filter(|&x| x != 0).collect();
        assert!(
            nonzero.len() == 2 && nonzero.iter().all(|x| x.abs() == 1),
            "a D4 root has exactly two nonzero coordinates, each ±1"
        );
        Root(c)
    }

    pub fn neg(&self) -> Root {
        Root([-self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    /// Positive roots are e_i ± e_j with i < j: first nonzero coordinate +1.
    pub fn is_positive(&self) -> bool {
        *self.0.iter().find(|&&x| x != 0).expect("roots are nonzero") > 0
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        self.0.iter().map(|&x| rat(x)).collect()
    }
}

/// All 24 roots, closed under negation; 12 are positive.
pub fn root_system() -> Vec<Root> {
    let mut roots = Vec::with_capacity(24);
    for i in 0..4 {
        for j in i + 1..4 {
            for (si, sj) in [(1, 1), (1, -1)] {
                let mut c = [0i64; 4];
                c[i] = si;
                c[j] = sj;
                roots.push(Root::new(c));
            }
        }
    }
    let negatives: Vec<Root> = roots.iter().map(Root::neg).collect();
    roots.extend(negatives);
    roots
}

pub fn positive_roots() -> Vec<Root> {
    root_system().into_iter().filter(Root::is_positive).collect()
}

/// Simple roots in the diagram order f₀ (centre), f₁, f₂, f₃ (outer nodes).
pub fn simple_roots() -> [Root; 4] {
    [
        Root::new([0, 1, -1, 0]),  // f0 = e2 - e3
        Root::new([1, -1, 0, 0]),  // f1 = e1 - e2
        Root::new([0, 0, 1, -1]),  // f2 = e3 - e4
        Root::new([0, 0, 1, 1]),   // f3 = e3 + e4
    ]
}

/// An orthogonal 4×4 action on the Cartan subalgebra permuting the roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanAction(pub Matrix<Rat>);

impl CartanAction {
    pub fn apply(&self, r: &Root) -> Root {
        let img = self.0.apply(&r.to_rat());
        let mut c = [0i64; 4];
        for (i, x) in img.iter().enumerate() {
            assert!(num::One::is_one(x.denom()) || x.is_zero(), "image is not integral");
            c[i] = x.numer().to_i64().expect("small coordinates");
        }
        Root::new(c)
    }

    /// Image in f-coordinates of a vector given in f-coordinates.
    pub fn apply_f(&self, c: &[Rat; 4]) -> [Rat; 4] {
        let e = f_to_e(c);
        let img = self.0.apply(&e);
        e_to_f(&img)
    }

    pub fn trace(&self) -> Rat {
        self.0.trace()
    }
}

/// Matrix with columns f₀..f₃ in e-coordinates.
fn f_matrix() -> Matrix<Rat> {
    let f = simple_roots();
    Matrix::from_fn(4, 4, |i, j| rat(f[j].0[i]))
}

pub fn f_to_e(c: &[Rat; 4]) -> Vec<Rat> {
    f_matrix().apply(&c.to_vec())
}

pub fn e_to_f(e: &[Rat]) -> [Rat; 4] {
    let sol = f_matrix().solve(e).expect("simple roots span the Cartan");
    [sol[0].clone(), sol[1].clone(), sol[2].clone(), sol[3].clone()]
}

/// The action of u on the Cartan subalgebra: the unique linear map realising
/// the diagram symmetry on simple roots (σ: f₂ ↔ f₃ fixing f₀, f₁;
/// τ: f₁ → f₂ → f₃ → f₁ fixing f₀).
pub fn triality_on_cartan(u: &S3) -> CartanAction {
    let f = f_matrix();
    // Outer node f_{i+1} sits in slot i of the S3 slot action; f0 is fixed.
    let node_image = |j: usize| -> usize {
        if j == 0 {
            0
        } else {
            u.apply(j - 1) + 1
        }
    };
    let simple = simple_roots();
    let mut img = Matrix::zeros(4, 4);
    for j in 0..4 {
        let target = simple[node_image(j)];
        for i in 0..4 {
            *img.at_mut(i, j) = rat(target.0[i]);
        }
    }
    // M F = img  ⇒  row i of M solves Fᵀ x = (row i of img).
    let ft = f.transpose();
    let mut m = Matrix::zeros(4, 4);
    for i in 0..4 {
        let row: Vec<Rat> = (0..4).map(|j| img.at(i, j).clone()).collect();
        let sol = ft.solve(&row).expect("simple roots are a basis");
        for (j, value) in sol.into_iter().enumerate() {
            *m.at_mut(i, j) = value;
        }
    }
    CartanAction(m)
}

/// Number of roots fixed by the root permutation of u.
fn fixed_root_count(u: &S3) -> usize {
    let action = triality_on_cartan(u);
    root_system().iter().filter(|r| action.apply(r) == **r).count()
}

/// Trace of u in the adjoint representation: the Cartan trace plus one for
/// every fixed root. Always a rational integer (returned in Q(ω) for
/// uniformity with the fixed-point traces it feeds).
pub fn adjoint_trace(u: &S3) -> Eis {
    let cartan = triality_on_cartan(u).trace();
    let fixed = rat(fixed_root_count(u) as i64);
    let total = cartan + fixed;
    assert!(num::One::is_one(total.denom()), "adjoint trace must be integral");
    Eis::from_rat(total)
}

/// Eigenvalue multiplicities of u on so(8), over {1, −1, ω, ω²}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdjointDecomposition {
    pub mult_one: usize,
    pub mult_minus_one: usize,
    pub mult_omega: usize,
    pub mult_omega_sq: usize,
}

impl AdjointDecomposition {
    pub fn total(&self) -> usize {
        self.mult_one + self.mult_minus_one + self.mult_omega + self.mult_omega_sq
    }

    /// Multiplicity-weighted eigenvalue sum.
    pub fn trace(&self) -> Eis {
        let ints = Eis::from_int(self.mult_one as i64 - self.mult_minus_one as i64);
        let om = Eis::omega() * Eis::from_int(self.mult_omega as i64);
        let om2 = Eis::omega_sq() * Eis::from_int(self.mult_omega_sq as i64);
        ints + om + om2
    }
}

/// Decomposition of so(8) = h ⊕ (root spaces) under u: Cartan eigenvalues by
/// character projection on the 4×4 action, root spaces by the orbit
/// structure of the root permutation (a k-orbit contributes each k-th root
/// of unity once).
pub fn adjoint_decomposition(u: &S3) -> AdjointDecomposition {
    let action = triality_on_cartan(u);
    let t = action.trace();
    let (mut one, mut minus, mut om, mut om2) = (0usize, 0usize, 0usize, 0usize);

    // Cartan block.
    match u.order() {
        1 => one += 4,
        2 => {
            let plus = (rat(4) + t.clone()) / rat(2);
            let neg = (rat(4) - t) / rat(2);
            one += as_count(&plus);
            minus += as_count(&neg);
        }
        3 => {
            // trace(u) = trace(u²) here, so m₁ = (4+2t)/3 and
            // m_ω = m_ω² = (4−t)/3.
            let m1 = (rat(4) + rat(2) * t.clone()) / rat(3);
            let mo = (rat(4) - t) / rat(3);
            one += as_count(&m1);
            om += as_count(&mo);
            om2 += as_count(&mo);
        }
        _ => unreachable!(),
    }

    // Root spaces: orbit sizes of the permutation on the 24 roots.
    let roots = root_system();
    let mut seen = vec![false; roots.len()];
    for start in 0..roots.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = 0;
        let mut r = roots[start];
        loop {
            let idx = roots.iter().position(|x| *x == r).expect("roots are permuted");
            if seen[idx] {
                break;
            }
            seen[idx] = true;
            orbit += 1;
            r = action.apply(&r);
        }
        match orbit {
            1 => one += 1,
            2 => {
                one += 1;
                minus += 1;
            }
            3 => {
                one += 1;
                om += 1;
                om2 += 1;
            }
            n => panic!("impossible orbit length {n} for an S3 element"),
        }
    }

    let dec = AdjointDecomposition {
        mult_one: one,
        mult_minus_one: minus,
        mult_omega: om,
        mult_omega_sq: om2,
    };
    assert_eq!(dec.total(), 28);
    assert_eq!(dec.trace(), adjoint_trace(u));
    dec
}

fn as_count(r: &Rat) -> usize {
    assert!(num::One::is_one(r.denom()), "multiplicity must be integral");
    r.numer().to_usize().expect("multiplicities are small and nonnegative")
}

/// The 3×4 array of the 12 positive roots in f-coordinates whose first three
/// columns are cyclically permuted by τ while the last column is fixed.
/// Entries are (c₀, c₁, c₂, c₃) for c₀f₀ + c₁f₁ + c₂f₂ + c₃f₃.
pub fn positive_root_array() -> [[[i64; 4]; 4]; 3] {
    [
        [[0, 1, 0, 0], [1, 1, 0, 0], [1, 0, 1, 1], [1, 0, 0, 0]],
        [[0, 0, 1, 0], [1, 0, 1, 0], [1, 1, 0, 1], [1, 1, 1, 1]],
        [[0, 0, 0, 1], [1, 0, 0, 1], [1, 1, 1, 0], [2, 1, 1, 1]],
    ]
}

/// Checks that the array lists exactly the 12 positive roots, that τ
/// cyclically permutes the rows within each of the first three columns
/// (row r ↦ row r+1 mod 3), and that the last column is fixed pointwise.
pub fn positive_root_array_check() -> bool {
    let arr = positive_root_array();
    let tau = triality_on_cartan(&S3::Tau);
    let as_f = |e: &[i64; 4]| -> [Rat; 4] { [rat(e[0]), rat(e[1]), rat(e[2]), rat(e[3])] };

    let mut listed: Vec<Root> = Vec::new();
    for row in &arr {
        for entry in row {
            let e = f_to_e(&as_f(entry));
            let mut c = [0i64; 4];
            for (i, x) in e.iter().enumerate() {
                c[i] = x.numer().to_i64().expect("small");
            }
            listed.push(Root::new(c));
        }
    }
    listed.sort_by_key(|r| r.0);
    let mut expected = positive_roots();
    expected.sort_by_key(|r| r.0);
    if listed != expected {
        return false;
    }

    for (r, row) in arr.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            let image = tau.apply_f(&as_f(entry));
            let target = as_f(if c < 3 { &arr[(r + 1) % 3][c] } else { entry });
            if image != target {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_roots_split_evenly() {
        let roots = root_system();
        assert_eq!(roots.len(), 24);
        assert_eq!(positive_roots().len(), 12);
        for r in &roots {
            assert!(roots.contains(&r.neg()));
            assert_eq!(r.is_positive(), !r.neg().is_positive());
        }
    }

    #[test]
    fn simple_root_sums() {
        // f0+f1+f2+f3 = e1+e3 and 2f0+f1+f2+f3 = e1+e2 (the highest root).
        let one = [rat(1), rat(1), rat(1), rat(1)];
        assert_eq!(f_to_e(&one), vec![rat(1), rat(0), rat(1), rat(0)]);
        let high = [rat(2), rat(1), rat(1), rat(1)];
        assert_eq!(f_to_e(&high), vec![rat(1), rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn sigma_is_the_last_coordinate_flip() {
        let sigma = triality_on_cartan(&S3::Sigma);
        let mut expected = Matrix::identity(4);
        *expected.at_mut(3, 3) = rat(-1);
        assert_eq!(sigma.0, expected);
        // τ fixes f0 = e2 − e3.
        let tau = triality_on_cartan(&S3::Tau);
        let f0 = Root::new([0, 1, -1, 0]);
        assert_eq!(tau.apply(&f0), f0);
        let cubed = tau.0.mul(&tau.0).mul(&tau.0);
        assert_eq!(cubed, Matrix::identity(4));
    }

    #[test]
    fn cartan_action_is_orthogonal_and_permutes_roots() {
        for u in S3::ALL {
            let m = triality_on_cartan(&u).0;
            assert_eq!(m.transpose().mul(&m), Matrix::identity(4), "{u} not orthogonal");
            let action = triality_on_cartan(&u);
            let roots = root_system();
            for r in &roots {
                assert!(roots.contains(&action.apply(r)), "{u} does not permute roots");
            }
        }
        for a in S3::ALL {
            for b in S3::ALL {
                let lhs = triality_on_cartan(&a).0.mul(&triality_on_cartan(&b).0);
                assert_eq!(lhs, triality_on_cartan(&a.mul(&b)).0);
            }
        }
    }

    #[test]
    fn adjoint_traces() {
        assert_eq!(adjoint_trace(&S3::Id), Eis::from_int(28));
        assert_eq!(adjoint_trace(&S3::Sigma), Eis::from_int(14));
        assert_eq!(adjoint_trace(&S3::Tau), Eis::from_int(7));
        // Traces depend only on the conjugacy class.
        assert_eq!(adjoint_trace(&S3::SigmaTau), Eis::from_int(14));
        assert_eq!(adjoint_trace(&S3::SigmaTauSq), Eis::from_int(14));
        assert_eq!(adjoint_trace(&S3::TauSq), Eis::from_int(7));
    }

    #[test]
    fn adjoint_decompositions() {
        let id = adjoint_decomposition(&S3::Id);
        assert_eq!((id.mult_one, id.total()), (28, 28));

        let sigma = adjoint_decomposition(&S3::Sigma);
        assert_eq!(sigma.mult_one, 21);
        assert_eq!(sigma.mult_minus_one, 7);
        assert_eq!(sigma.mult_omega, 0);

        let tau = adjoint_decomposition(&S3::Tau);
        assert_eq!(tau.mult_one, 14); // the fixed subalgebra, of G2 size
        assert_eq!(tau.mult_omega, 7);
        assert_eq!(tau.mult_omega_sq, 7);
        assert_eq!(tau.mult_minus_one, 0);
    }

    #[test]
    fn array_columns_cycle_under_tau() {
        assert!(positive_root_array_check());
        // Spot checks: τ(f1) = f2 (column 1) and τ(f0+f1+f2) = f0+f2+f3.
        let tau = triality_on_cartan(&S3::Tau);
        let img = tau.apply_f(&[rat(0), rat(1), rat(0), rat(0)]);
        assert_eq!(img, [rat(0), rat(0), rat(1), rat(0)]);
        let img = tau.apply_f(&[rat(1), rat(1), rat(1), rat(0)]);
        assert_eq!(img, [rat(1), rat(0), rat(1), rat(1)]);
    }
}
