//! R-matrices of group rings built from bicharacters, and the comodule
//! structure they induce on a module.

use serde::{Deserialize, Serialize};

use crate::abelian::{Bicharacter, Character, FinAbGroup, GroupElement};
use crate::cyclofield::Scalar;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// An element `Σ R[g][g'] g ⊗ g'` of `K[G] ⊗ K[G]`, rows and columns indexed
/// canonically by `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrix {
    group: FinAbGroup,
    entries: Matrix,
}

impl RMatrix {
    pub fn new(group: FinAbGroup, entries: Matrix) -> Result<Self> {
        let n = group.order();
        if entries.rows() != n || entries.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: entries.rows() });
        }
        Ok(RMatrix { group, entries })
    }

    /// `1 ⊗ 1`.
    pub fn identity(group: FinAbGroup) -> Self {
        let n = group.order();
        let mut entries = Matrix::zeros(n, n);
        entries.set(0, 0, Scalar::one());
        RMatrix { group, entries }
    }

    /// `(1/|G|) Σ θ(g,g') g ⊗ g'` without any nondegeneracy requirement.
    pub fn from_bicharacter_unchecked(theta: &Bicharacter) -> Self {
        let scale = Scalar::rational(1, theta.group().order() as i64);
        RMatrix { group: theta.group().clone(), entries: theta.table().scale(&scale) }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn get(&self, g: &GroupElement, h: &GroupElement) -> &Scalar {
        self.entries.get(self.group.index_of(g), self.group.index_of(h))
    }

    pub fn is_identity(&self) -> bool {
        *self == RMatrix::identity(self.group.clone())
    }

    /// Product in `K[G] ⊗ K[G]`: `(g ⊗ g')(h ⊗ h') = gh ⊗ g'h'`.
    pub fn multiply(&self, other: &RMatrix) -> RMatrix {
        let grp = &self.group;
        let els = grp.elements();
        let n = els.len();
        let mut out = Matrix::zeros(n, n);
        for (a, g) in els.iter().enumerate() {
            for (b, g2) in els.iter().enumerate() {
                let x = self.entries.get(a, b);
                if x.is_zero() {
                    continue;
                }
                for (c, h) in els.iter().enumerate() {
                    for (d, h2) in els.iter().enumerate() {
                        let y = other.entries.get(c, d);
                        if !y.is_zero() {
                            let i = grp.index_of(&grp.op(g, h));
                            let j = grp.index_of(&grp.op(g2, h2));
                            *out.get_mut(i, j) += &(x * y);
                        }
                    }
                }
            }
        }
        RMatrix { group: grp.clone(), entries: out }
    }

    /// Solves `R·X = 1 ⊗ 1` in the `|G|²`-dimensional commutative algebra
    /// `K[G] ⊗ K[G]`.
    pub fn inverse(&self) -> Option<RMatrix> {
        let grp = &self.group;
        let els = grp.elements();
        let n = els.len();
        let mut system = Matrix::zeros(n * n, n * n);
        for (a, g) in els.iter().enumerate() {
            for (b, g2) in els.iter().enumerate() {
                for (c, h) in els.iter().enumerate() {
                    for (d, h2) in els.iter().enumerate() {
                        let gh = grp.index_of(&grp.op(g, h));
                        let gh2 = grp.index_of(&grp.op(g2, h2));
                        system.set(gh * n + gh2, c * n + d, self.entries.get(a, b).clone());
                    }
                }
            }
        }
        let mut rhs = vec![Scalar::zero(); n * n];
        rhs[0] = Scalar::one();
        let x = system.solve(&rhs)?;
        let rows = (0..n).map(|c| x[c * n..(c + 1) * n].to_vec()).collect();
        Some(RMatrix { group: grp.clone(), entries: Matrix::from_rows(rows).ok()? })
    }
}

/// An R-matrix together with its explicitly constructed inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixPair {
    pub r: RMatrix,
    pub inverse: RMatrix,
}

/// `R = (1/|G|) Σ θ(g,g') g ⊗ g'` with inverse `(1/|G|) Σ θ(g⁻¹,g') g ⊗ g'`.
pub fn build_rmatrix(theta: &Bicharacter) -> Result<RMatrixPair> {
    if !theta.is_nondegenerate() {
        return Err(Error::DegenerateBicharacter);
    }
    let grp = theta.group();
    let els = grp.elements();
    let n = els.len();
    let scale = Scalar::rational(1, n as i64);
    let mut inv = Matrix::zeros(n, n);
    for (a, g) in els.iter().enumerate() {
        for (b, h) in els.iter().enumerate() {
            inv.set(a, b, &theta.eval(&grp.inverse(g), h) * &scale);
        }
    }
    Ok(RMatrixPair {
        r: RMatrix::from_bicharacter_unchecked(theta),
        inverse: RMatrix { group: grp.clone(), entries: inv },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RMatrixReport {
    /// `Δ^cop(h)R = RΔ(h)`. For a commutative and cocommutative group ring
    /// this holds by construction; `axiom1_computed` is the explicit check.
    pub axiom1_structural: bool,
    pub axiom1_computed: bool,
    /// `(Δ ⊗ id)(R) = R₁₃R₂₃`.
    pub axiom2: bool,
    /// `(id ⊗ Δ)(R) = R₁₃R₁₂`.
    pub axiom3: bool,
    pub invertible: bool,
}

impl RMatrixReport {
    pub fn all_pass(&self) -> bool {
        self.axiom1_computed && self.axiom2 && self.axiom3 && self.invertible
    }
}

pub fn check_rmatrix(r: &RMatrix) -> RMatrixReport {
    let grp = r.group();
    let els = grp.elements();
    let n = els.len();
    let idx = |g: &GroupElement| grp.index_of(g);
    let at = |a: usize, b: usize, c: usize| (a * n + b) * n + c;

    let mut axiom1 = true;
    for k in &els {
        let mut kk = Matrix::zeros(n, n);
        kk.set(idx(k), idx(k), Scalar::one());
        let kk = RMatrix { group: grp.clone(), entries: kk };
        if r.multiply(&kk) != kk.multiply(r) {
            axiom1 = false;
        }
    }

    let mut lhs2 = vec![Scalar::zero(); n * n * n];
    let mut lhs3 = vec![Scalar::zero(); n * n * n];
    let mut rhs2 = vec![Scalar::zero(); n * n * n];
    let mut rhs3 = vec![Scalar::zero(); n * n * n];
    for (a, g) in els.iter().enumerate() {
        for (b, g2) in els.iter().enumerate() {
            let x = r.entries.get(a, b);
            if x.is_zero() {
                continue;
            }
            lhs2[at(a, a, b)] += x;
            lhs3[at(a, b, b)] += x;
            for (c, h) in els.iter().enumerate() {
                for (d, h2) in els.iter().enumerate() {
                    let y = r.entries.get(c, d);
                    if y.is_zero() {
                        continue;
                    }
                    let xy = x * y;
                    rhs2[at(a, c, idx(&grp.op(g2, h2)))] += &xy;
                    rhs3[at(idx(&grp.op(g, h)), d, b)] += &xy;
                }
            }
        }
    }
    RMatrixReport {
        axiom1_structural: true,
        axiom1_computed: axiom1,
        axiom2: lhs2 == rhs2,
        axiom3: lhs3 == rhs3,
        invertible: r.inverse().is_some(),
    }
}

/// The grading `π_h = (1/|G|) Σ_g θ(h,g) φ_g` induced by an action and a
/// symmetric nondegenerate bicharacter, indexed canonically by `G`.
pub fn induce_coaction(action: &[Matrix], theta: &Bicharacter) -> Result<Vec<Matrix>> {
    if !theta.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    if !theta.is_nondegenerate() {
        return Err(Error::DegenerateBicharacter);
    }
    let grp = theta.group();
    let els = grp.elements();
    if action.len() != els.len() {
        return Err(Error::DimensionMismatch { expected: els.len(), found: action.len() });
    }
    let dim = action.first().map_or(0, Matrix::rows);
    let scale = Scalar::rational(1, els.len() as i64);
    Ok(els
        .iter()
        .map(|h| {
            let mut p = Matrix::zeros(dim, dim);
            for (gi, g) in els.iter().enumerate() {
                p = &p + &action[gi].scale(&(&theta.eval(h, g) * &scale));
            }
            p
        })
        .collect())
}

/// `γ = θ(g, ·)`.
pub fn theta_character(theta: &Bicharacter, g: &GroupElement) -> Character {
    theta.left_character(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein_theta(zeta_sq: i64) -> Bicharacter {
        let m = Matrix::from_int_rows(&[&[zeta_sq, -1], &[-1, 1]], 1);
        Bicharacter::new(FinAbGroup::klein(), m).unwrap()
    }

    /// Convolution in `K[G] ⊗ K[G]` written out independently of
    /// `RMatrix::multiply`.
    fn convolve(grp: &FinAbGroup, x: &Matrix, y: &Matrix) -> Matrix {
        let n = grp.order();
        let mut out = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let i = grp.index_of(&grp.op(&grp.element(a), &grp.element(c)));
                        let j = grp.index_of(&grp.op(&grp.element(b), &grp.element(d)));
                        let t = x.get(a, b) * y.get(c, d);
                        *out.get_mut(i, j) += &t;
                    }
                }
            }
        }
        out
    }

    #[test]
    fn trivial_group_gives_one_tensor_one() {
        let t = Bicharacter::trivial(FinAbGroup::trivial());
        let pair = build_rmatrix(&t).unwrap();
        assert!(pair.r.is_identity());
        assert!(check_rmatrix(&pair.r).all_pass());
    }

    #[test]
    fn klein_rmatrix_entries_and_inverse() {
        let theta = klein_theta(1);
        let pair = build_rmatrix(&theta).unwrap();
        let quarter = Scalar::rational(1, 4);
        // table generated by rows (1,-1;-1,1) on the generators g2, g3
        let expect = Matrix::from_int_rows(&[&[1, 1, 1, 1], &[1, 1, -1, -1], &[1, -1, 1, -1], &[1, -1, -1, 1]], 1)
            .scale(&quarter);
        assert_eq!(pair.r.entries(), &expect);
        for zs in [1, -1] {
            let theta = klein_theta(zs);
            let pair = build_rmatrix(&theta).unwrap();
            let grp = theta.group();
            let prod = convolve(grp, pair.r.entries(), pair.inverse.entries());
            assert_eq!(prod, RMatrix::identity(grp.clone()).entries().clone());
            assert_eq!(pair.r.inverse().unwrap(), pair.inverse);
            let rep = check_rmatrix(&pair.r);
            assert!(rep.all_pass(), "{rep:?}");
        }
    }

    #[test]
    fn identity_rmatrix_passes() {
        assert!(check_rmatrix(&RMatrix::identity(FinAbGroup::klein())).all_pass());
    }

    #[test]
    fn degenerate_bicharacter_fails_axiom_two() {
        let t = Bicharacter::trivial(FinAbGroup::cyclic(2).unwrap());
        assert_eq!(build_rmatrix(&t), Err(Error::DegenerateBicharacter));
        let r = RMatrix::from_bicharacter_unchecked(&t);
        let rep = check_rmatrix(&r);
        assert!(!rep.axiom2);
        assert!(!rep.invertible);
    }

    #[test]
    fn induce_coaction_rejections() {
        let grp = FinAbGroup::cyclic(4).unwrap();
        let action = vec![Matrix::identity(1); 4];
        let asym = Bicharacter::new(grp.clone(), Matrix::from_rows(vec![vec![Scalar::iota()]]).unwrap()).unwrap();
        // 1×1 matrices are always symmetric, so build an asymmetric one on Z2×Z2
        let m = Matrix::from_int_rows(&[&[1, -1], &[1, 1]], 1);
        let k = Bicharacter::new(FinAbGroup::klein(), m).unwrap();
        assert_eq!(induce_coaction(&vec![Matrix::identity(1); 4], &k), Err(Error::NonSymmetric));
        assert!(induce_coaction(&action, &asym).is_ok());
        let deg = Bicharacter::trivial(FinAbGroup::cyclic(2).unwrap());
        assert_eq!(induce_coaction(&action[..2], &deg), Err(Error::DegenerateBicharacter));
    }

    #[test]
    fn trivial_action_induces_trivial_coaction() {
        let theta = klein_theta(-1);
        let action = vec![Matrix::identity(3); 4];
        let pis = induce_coaction(&action, &theta).unwrap();
        assert!(pis[0].is_identity());
        assert!(pis[1..].iter().all(Matrix::is_zero));
    }

    #[test]
    fn functoriality_on_a_regular_module() {
        // K[G] acting on itself by translation
        let theta = klein_theta(-1);
        let grp = theta.group().clone();
        let els = grp.elements();
        let action: Vec<Matrix> = els
            .iter()
            .map(|g| {
                let mut m = Matrix::zeros(4, 4);
                for (j, h) in els.iter().enumerate() {
                    m.set(grp.index_of(&grp.op(g, h)), j, Scalar::one());
                }
                m
            })
            .collect();
        let pis = induce_coaction(&action, &theta).unwrap();
        let mut sum = Matrix::zeros(4, 4);
        for (a, p) in pis.iter().enumerate() {
            sum = &sum + p;
            for (b, q) in pis.iter().enumerate() {
                let pq = p * q;
                assert_eq!(pq, if a == b { p.clone() } else { Matrix::zeros(4, 4) });
            }
            for f in &action {
                assert_eq!(&(f * p), &(p * f));
            }
        }
        assert!(sum.is_identity());
        // every H-linear endomorphism commutes with the grading
        for f in &action {
            for p in &pis {
                assert_eq!(&(f * p), &(p * f));
            }
        }
    }
}
