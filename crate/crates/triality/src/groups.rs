//! The symmetric groups S3 and S4 as concrete permutations.
//!
//! S3 is the outer symmetry permuting the three 8-dimensional representations;
//! it acts on representation slots indexed 0, 1, 2. S4 appears twice: as the
//! Galois group of the 4:1 tower and as coordinate permutations of the rank-4
//! class lattice. Composition is function composition throughout:
//! `(f * g)(x) = f(g(x))`.

use std::fmt;

/// An element of S3, written in terms of the generators σ (a transposition)
/// and τ (a 3-cycle), with the relation στσ = τ².
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum S3 {
    Id,
    Tau,
    TauSq,
    Sigma,
    SigmaTau,
    SigmaTauSq,
}

/// Conjugacy classes of S3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum S3Class {
    Identity,
    Transposition,
    ThreeCycle,
}

impl S3 {
    pub const ALL: [S3; 6] = [
        S3::Id,
        S3::Tau,
        S3::TauSq,
        S3::Sigma,
        S3::SigmaTau,
        S3::SigmaTauSq,
    ];

    pub const INVOLUTIONS: [S3; 3] = [S3::Sigma, S3::SigmaTau, S3::SigmaTauSq];

    /// Image of representation slot `i` (0, 1 or 2); τ cycles 0 → 1 → 2 → 0
    /// and σ exchanges slots 1 and 2.
    pub fn apply(&self, i: usize) -> usize {
        self.perm()[i]
    }

    fn perm(&self) -> [usize; 3] {
        match self {
            S3::Id => [0, 1, 2],
            S3::Tau => [1, 2, 0],
            S3::TauSq => [2, 0, 1],
            S3::Sigma => [0, 2, 1],
            S3::SigmaTau => [2, 1, 0],
            S3::SigmaTauSq => [1, 0, 2],
        }
    }

    fn from_perm(p: [usize; 3]) -> S3 {
        *S3::ALL
            .iter()
            .find(|g| g.perm() == p)
            .expect("every permutation of three slots is an S3 element")
    }

    /// Function composition: `(self * rhs)(x) = self(rhs(x))`.
    pub fn mul(&self, rhs: &S3) -> S3 {
        let a = self.perm();
        let b = rhs.perm();
        S3::from_perm([a[b[0]], a[b[1]], a[b[2]]])
    }

    pub fn inverse(&self) -> S3 {
        match self {
            S3::Tau => S3::TauSq,
            S3::TauSq => S3::Tau,
            g => *g,
        }
    }

    pub fn sign(&self) -> i64 {
        match self.class() {
            S3Class::Transposition => -1,
            _ => 1,
        }
    }

    pub fn order(&self) -> usize {
        match self.class() {
            S3Class::Identity => 1,
            S3Class::Transposition => 2,
            S3Class::ThreeCycle => 3,
        }
    }

    pub fn class(&self) -> S3Class {
        match self {
            S3::Id => S3Class::Identity,
            S3::Tau | S3::TauSq => S3Class::ThreeCycle,
            _ => S3Class::Transposition,
        }
    }

    pub fn is_involution(&self) -> bool {
        self.class() == S3Class::Transposition
    }
}

impl fmt::Display for S3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            S3::Id => "1",
            S3::Tau => "tau",
            S3::TauSq => "tau^2",
            S3::Sigma => "sigma",
            S3::SigmaTau => "sigma*tau",
            S3::SigmaTauSq => "sigma*tau^2",
        };
        write!(f, "{s}")
    }
}

/// A permutation of {0, 1, 2, 3}; `images[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm4 {
    images: [usize; 4],
}

impl Perm4 {
    pub fn identity() -> Perm4 {
        Perm4 { images: [0, 1, 2, 3] }
    }

    pub fn new(images: [usize; 4]) -> Perm4 {
        let mut seen = [false; 4];
        for &i in &images {
            assert!(i < 4 && !seen[i], "not a permutation of 0..4");
            seen[i] = true;
        }
        Perm4 { images }
    }

    /// Permutation from a cycle, e.g. `from_cycle(&[0, 2, 1, 3])` is the
    /// 4-cycle 0 → 2 → 1 → 3 → 0.
    pub fn from_cycle(cycle: &[usize]) -> Perm4 {
        let mut images = [0, 1, 2, 3];
        for (k, &i) in cycle.iter().enumerate() {
            images[i] = cycle[(k + 1) % cycle.len()];
        }
        Perm4::new(images)
    }

    /// The transposition (23) generating the S3 subgroup together with τ.
    pub fn sigma() -> Perm4 {
        Perm4::from_cycle(&[2, 3])
    }

    /// The 3-cycle (123).
    pub fn tau() -> Perm4 {
        Perm4::from_cycle(&[1, 2, 3])
    }

    /// The transposition (01).
    pub fn sigma_prime() -> Perm4 {
        Perm4::from_cycle(&[0, 1])
    }

    /// The 4-cycle (0213), chosen so that σσ′ = φ².
    pub fn phi() -> Perm4 {
        Perm4::from_cycle(&[0, 2, 1, 3])
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Function composition: `(self * rhs)(x) = self(rhs(x))`.
    pub fn mul(&self, rhs: &Perm4) -> Perm4 {
        Perm4 {
            images: [
                self.images[rhs.images[0]],
                self.images[rhs.images[1]],
                self.images[rhs.images[2]],
                self.images[rhs.images[3]],
            ],
        }
    }

    pub fn inverse(&self) -> Perm4 {
        let mut images = [0; 4];
        for i in 0..4 {
            images[self.images[i]] = i;
        }
        Perm4 { images }
    }

    pub fn pow(&self, n: usize) -> Perm4 {
        let mut acc = Perm4::identity();
        for _ in 0..n {
            acc = self.mul(&acc);
        }
        acc
    }

    pub fn sign(&self) -> i64 {
        let mut sign = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.images[i] > self.images[j] {
                    sign = -sign;
                }
            }
        }
        sign
    }

    /// Cycle lengths sorted descending; this determines the conjugacy class.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 4];
        let mut lens = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        let mut items = [0usize, 1, 2, 3];
        permute(&mut items, 0, &mut out);
        out
    }
}

fn permute(items: &mut [usize; 4], k: usize, out: &mut Vec<Perm4>) {
    if k == 4 {
        out.push(Perm4 { images: *items });
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} {} {} {}]",
            self.images[0], self.images[1], self.images[2], self.images[3]
        )
    }
}

/// Closure of a generating set under composition.
pub fn generated(generators: &[Perm4]) -> Vec<Perm4> {
    let mut elems = vec![Perm4::identity()];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in generators {
                let prod = h.mul(g);
                if !elems.contains(&prod) {
                    elems.push(prod);
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    elems
}

/// Right cosets Hx of `subgroup` in `group`, each listed as its member set.
pub fn right_cosets(group: &[Perm4], subgroup: &[Perm4]) -> Vec<Vec<Perm4>> {
    assert!(group.len() % subgroup.len() == 0);
    let mut cosets: Vec<Vec<Perm4>> = Vec::new();
    for x in group {
        if cosets.iter().any(|c| c.contains(x)) {
            continue;
        }
        let mut coset: Vec<Perm4> = subgroup.iter().map(|h| h.mul(x)).collect();
        coset.sort_by_key(|p| p.images);
        cosets.push(coset);
    }
    cosets
}

/// Orbit sizes of the cyclic group generated by `g` acting on the right
/// cosets of `subgroup` by right multiplication. For a branched cover these
/// are the ramification indices over a branch point with local monodromy `g`.
pub fn coset_orbit_sizes(group: &[Perm4], subgroup: &[Perm4], g: &Perm4) -> Vec<usize> {
    let cosets = right_cosets(group, subgroup);
    let index_of = |p: &Perm4| -> usize {
        cosets
            .iter()
            .position(|c| c.contains(p))
            .expect("element lies in some coset")
    };
    let mut seen = vec![false; cosets.len()];
    let mut sizes = Vec::new();
    for start in 0..cosets.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut rep = cosets[start][0];
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            rep = rep.mul(g);
            i = index_of(&rep);
        }
        sizes.push(len);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_relations() {
        let s = S3::Sigma;
        let t = S3::Tau;
        assert_eq!(s.mul(&s), S3::Id);
        assert_eq!(t.mul(&t).mul(&t), S3::Id);
        // στσ = τ².
        assert_eq!(s.mul(&t).mul(&s), S3::TauSq);
        // σ·στ = τ.
        assert_eq!(s.mul(&S3::SigmaTau), S3::Tau);
        for g in S3::ALL {
            assert_eq!(g.mul(&g.inverse()), S3::Id);
        }
    }

    #[test]
    fn s3_slot_action() {
        // στ exchanges slots 0 and 2 and fixes slot 1.
        assert_eq!(S3::SigmaTau.apply(0), 2);
        assert_eq!(S3::SigmaTau.apply(1), 1);
        // στ² exchanges slots 0 and 1.
        assert_eq!(S3::SigmaTauSq.apply(0), 1);
        assert_eq!(S3::SigmaTauSq.apply(2), 2);
    }

    #[test]
    fn s4_named_elements() {
        let sigma = Perm4::sigma();
        let sigma_p = Perm4::sigma_prime();
        let phi = Perm4::phi();
        // σσ′ = φ².
        assert_eq!(sigma.mul(&sigma_p), phi.mul(&phi));
        assert_eq!(phi.pow(4), Perm4::identity());
        assert_eq!(Perm4::tau().pow(3), Perm4::identity());
        assert_eq!(phi.cycle_type(), vec![4]);
        assert_eq!(sigma.mul(&sigma_p).cycle_type(), vec![2, 2]);
    }

    #[test]
    fn s4_enumeration_and_classes() {
        let all = Perm4::all();
        assert_eq!(all.len(), 24);
        let count = |t: &[usize]| all.iter().filter(|p| p.cycle_type() == t).count();
        assert_eq!(count(&[1, 1, 1, 1]), 1);
        assert_eq!(count(&[2, 1, 1]), 6);
        assert_eq!(count(&[3, 1]), 8);
        assert_eq!(count(&[4]), 6);
        assert_eq!(count(&[2, 2]), 3);
    }

    #[test]
    fn klein_subgroup_from_phi_squared() {
        // The conjugates of φ² generate the Klein four-group.
        let phi2 = Perm4::phi().pow(2);
        let mut gens = Vec::new();
        for g in Perm4::all() {
            gens.push(g.mul(&phi2).mul(&g.inverse()));
        }
        let klein = generated(&gens);
        assert_eq!(klein.len(), 4);
        assert!(klein.iter().all(|p| p.cycle_type() == vec![2, 2]
            || p.cycle_type() == vec![1, 1, 1, 1]));
    }

    #[test]
    fn coset_orbits_for_regular_action() {
        let s4 = Perm4::all();
        let triv = vec![Perm4::identity()];
        // Free actions: a transposition has twelve 2-orbits, a 3-cycle eight
        // 3-orbits.
        assert_eq!(coset_orbit_sizes(&s4, &triv, &Perm4::sigma()), vec![2; 12]);
        assert_eq!(coset_orbit_sizes(&s4, &triv, &Perm4::tau()), vec![3; 8]);
    }

    #[test]
    fn coset_orbits_on_four_points() {
        let s4 = Perm4::all();
        let s3: Vec<Perm4> = s4.iter().filter(|p| p.apply(0) == 0).copied().collect();
        assert_eq!(s3.len(), 6);
        assert_eq!(
            coset_orbit_sizes(&s4, &s3, &Perm4::sigma()),
            vec![2, 1, 1]
        );
        assert_eq!(coset_orbit_sizes(&s4, &s3, &Perm4::tau()), vec![3, 1]);
    }
}
