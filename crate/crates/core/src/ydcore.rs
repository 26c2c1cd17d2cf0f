//! Structure-constant representation of a Yetter-Drinfeld Hopf algebra over
//! the group ring `K[G]` of a finite abelian group, the quasisymmetry, the
//! braided tensor product algebra `A ⊗̂ A`, and the axiom verifier.
//!
//! Over `K[G]` a left comodule is the same thing as a `G`-grading, so the
//! coaction is stored as one projector `π_g` per group element:
//! `δ(v) = Σ_g g ⊗ π_g(v)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{Character, FinAbGroup, GroupElement};
use crate::cyclofield::Scalar;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A vector in the algebra's fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlgElement {
    coeffs: Vec<Scalar>,
}

impl AlgElement {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        AlgElement { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        AlgElement { coeffs: vec![Scalar::zero(); n] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut a = AlgElement::zero(n);
        a.coeffs[i] = Scalar::one();
        a
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn scale(&self, s: &Scalar) -> AlgElement {
        AlgElement { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    fn axpy(&mut self, s: &Scalar, x: &AlgElement) {
        for (c, v) in self.coeffs.iter_mut().zip(&x.coeffs) {
            if !v.is_zero() {
                *c += &(s * v);
            }
        }
    }
}

impl std::ops::Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        AlgElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        AlgElement { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

/// An element of `A ⊗ A`; the coefficient of `eᵢ ⊗ eⱼ` sits at `i·n + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tensor2 {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zero(n: usize) -> Self {
        Tensor2 { dim: n, coeffs: vec![Scalar::zero(); n * n] }
    }

    pub fn basis(n: usize, i: usize, j: usize) -> Self {
        let mut t = Tensor2::zero(n);
        t.coeffs[i * n + j] = Scalar::one();
        t
    }

    /// `a ⊗ b`.
    pub fn pure(a: &AlgElement, b: &AlgElement) -> Self {
        let n = a.dim();
        let mut t = Tensor2::zero(n);
        for i in a.support() {
            for j in b.support() {
                t.coeffs[i * n + j] = &a.coeffs[i] * &b.coeffs[j];
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim + j]
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &Scalar) {
        self.coeffs[i * self.dim + j] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Nonzero terms `(i, j, c)` in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (k / n, k % n, c))
    }

    /// `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> Tensor2 {
        let n = self.dim;
        let mut t = Tensor2::zero(n);
        for (i, j, c) in self.terms() {
            t.coeffs[j * n + i] = c.clone();
        }
        t
    }

    /// `(f ⊗ g)(t)`.
    pub fn apply(&self, f: &Matrix, g: &Matrix) -> Tensor2 {
        let n = self.dim;
        let mut t = Tensor2::zero(n);
        for (i, j, c) in self.terms() {
            for p in 0..n {
                let fp = f.get(p, i);
                if fp.is_zero() {
                    continue;
                }
                let fc = fp * c;
                for q in 0..n {
                    let gq = g.get(q, j);
                    if !gq.is_zero() {
                        t.coeffs[p * n + q] += &(&fc * gq);
                    }
                }
            }
        }
        t
    }
}

impl std::ops::Add for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2 { dim: self.dim, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2 { dim: self.dim, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

/// A matrix attached to a group element (one `φ_g` or one `π_g`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupMatrix {
    pub g: GroupElement,
    pub matrix: Matrix,
}

/// The plain, serializable form of a [`YDAlgebra`].
///
/// `mult[i][j][k]` is the coefficient of `e_k` in `eᵢeⱼ`, `coprod[k][i][j]`
/// that of `eᵢ ⊗ eⱼ` in `Δ(e_k)`, column `j` of `antipode` is `S(eⱼ)`, and
/// column `j` of the coaction matrix for `g` is `π_g(eⱼ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YDParts {
    pub dim: usize,
    pub labels: Vec<String>,
    pub group: FinAbGroup,
    pub mult: Vec<Vec<Vec<Scalar>>>,
    pub unit: Vec<Scalar>,
    pub coprod: Vec<Vec<Vec<Scalar>>>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub action: Vec<GroupMatrix>,
    pub coaction: Vec<GroupMatrix>,
}

type Sparse2 = Vec<(usize, usize, Scalar)>;

/// A candidate Yetter-Drinfeld Hopf algebra over `K[G]`, given by structure
/// constants. Construction only checks shapes; [`YDAlgebra::verify_axioms`]
/// decides whether the data really define one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "YDParts", into = "YDParts")]
pub struct YDAlgebra {
    dim: usize,
    labels: Vec<String>,
    group: FinAbGroup,
    /// `eᵢeⱼ` at `i·n + j`, as `(k, coefficient)` pairs.
    mult: Vec<Vec<(usize, Scalar)>>,
    unit: AlgElement,
    coprod: Vec<Sparse2>,
    counit: Vec<Scalar>,
    antipode: Matrix,
    action: Vec<Matrix>,
    coaction: Vec<Matrix>,
    /// `σ(eⱼ ⊗ e_k)` at `j·n + k`.
    braid: Vec<Sparse2>,
}

fn shape_err(what: &str, expected: usize, found: usize) -> Error {
    if expected == found {
        Error::Malformed(what.to_string())
    } else {
        Error::DimensionMismatch { expected, found }
    }
}

fn group_indexed(group: &FinAbGroup, n: usize, entries: Vec<GroupMatrix>, what: &str) -> Result<Vec<Matrix>> {
    let mut slots: Vec<Option<Matrix>> = vec![None; group.order()];
    for GroupMatrix { g, matrix } in entries {
        group.check(&g)?;
        if matrix.rows() != n || matrix.cols() != n {
            return Err(shape_err(&format!("{what} matrix for {g}"), n, matrix.rows()));
        }
        let slot = &mut slots[group.index_of(&g)];
        if slot.is_some() {
            return Err(Error::Malformed(format!("duplicate {what} entry for {g}")));
        }
        *slot = Some(matrix);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::Malformed(format!("missing {what} entry for {}", group.element(i)))))
        .collect()
}

impl TryFrom<YDParts> for YDAlgebra {
    type Error = Error;
    fn try_from(p: YDParts) -> Result<Self> {
        YDAlgebra::from_parts(p)
    }
}

impl From<YDAlgebra> for YDParts {
    fn from(a: YDAlgebra) -> YDParts {
        a.to_parts()
    }
}

impl YDAlgebra {
    pub fn from_parts(p: YDParts) -> Result<Self> {
        let n = p.dim;
        let group = FinAbGroup::new(p.group.factors().to_vec())?;
        if p.labels.len() != n {
            return Err(shape_err("labels", n, p.labels.len()));
        }
        if p.unit.len() != n {
            return Err(shape_err("unit", n, p.unit.len()));
        }
        if p.counit.len() != n {
            return Err(shape_err("counit", n, p.counit.len()));
        }
        if p.antipode.rows() != n || p.antipode.cols() != n {
            return Err(shape_err("antipode", n, p.antipode.rows()));
        }
        for (name, t) in [("mult", &p.mult), ("coprod", &p.coprod)] {
            if t.len() != n {
                return Err(shape_err(name, n, t.len()));
            }
            for row in t {
                if row.len() != n {
                    return Err(shape_err(name, n, row.len()));
                }
                if let Some(v) = row.iter().find(|v| v.len() != n) {
                    return Err(shape_err(name, n, v.len()));
                }
            }
        }
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mult.push(
                    (0..n).filter(|&k| !p.mult[i][j][k].is_zero()).map(|k| (k, p.mult[i][j][k].clone())).collect(),
                );
            }
        }
        let coprod = (0..n)
            .map(|k| {
                let mut v = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if !p.coprod[k][i][j].is_zero() {
                            v.push((i, j, p.coprod[k][i][j].clone()));
                        }
                    }
                }
                v
            })
            .collect();
        let action = group_indexed(&group, n, p.action, "action")?;
        let coaction = group_indexed(&group, n, p.coaction, "coaction")?;
        let braid = braid_table(n, &action, &coaction);
        Ok(YDAlgebra {
            dim: n,
            labels: p.labels,
            group,
            mult,
            unit: AlgElement::new(p.unit),
            coprod,
            counit: p.counit,
            antipode: p.antipode,
            action,
            coaction,
            braid,
        })
    }

    pub fn to_parts(&self) -> YDParts {
        let n = self.dim;
        let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i * n + j] {
                    mult[i][j][*k] = c.clone();
                }
            }
        }
        let mut coprod = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (k, terms) in self.coprod.iter().enumerate() {
            for (i, j, c) in terms {
                coprod[k][*i][*j] = c.clone();
            }
        }
        let tag = |ms: &[Matrix]| {
            ms.iter().enumerate().map(|(i, m)| GroupMatrix { g: self.group.element(i), matrix: m.clone() }).collect()
        };
        YDParts {
            dim: n,
            labels: self.labels.clone(),
            group: self.group.clone(),
            mult,
            unit: self.unit.coeffs.clone(),
            coprod,
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            action: tag(&self.action),
            coaction: tag(&self.coaction),
        }
    }

    /// `K[B]` for a finite abelian group `B`, regarded as a YD Hopf algebra
    /// over `K[G]` with trivial action and coaction.
    pub fn group_algebra(basis_group: &FinAbGroup, group: &FinAbGroup) -> YDAlgebra {
        let n = basis_group.order();
        let els = basis_group.elements();
        let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
        let mut coprod = vec![vec![vec![Scalar::zero(); n]; n]; n];
        let mut antipode = Matrix::zeros(n, n);
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                mult[i][j][basis_group.index_of(&basis_group.op(a, b))] = Scalar::one();
            }
            coprod[i][i][i] = Scalar::one();
            antipode.set(basis_group.index_of(&basis_group.inverse(a)), i, Scalar::one());
        }
        let action = group.elements().into_iter().map(|g| GroupMatrix { g, matrix: Matrix::identity(n) }).collect();
        let coaction = group
            .elements()
            .into_iter()
            .enumerate()
            .map(|(i, g)| GroupMatrix { g, matrix: if i == 0 { Matrix::identity(n) } else { Matrix::zeros(n, n) } })
            .collect();
        YDAlgebra::from_parts(YDParts {
            dim: n,
            labels: (1..=n).map(|i| format!("g{i}")).collect(),
            group: group.clone(),
            mult,
            unit: AlgElement::basis(n, 0).into_coeffs(),
            coprod,
            counit: vec![Scalar::one(); n],
            antipode,
            action,
            coaction,
        })
        .expect("group algebra data are well formed")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn unit(&self) -> &AlgElement {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> AlgElement {
        AlgElement::basis(self.dim, i)
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn action_matrices(&self) -> &[Matrix] {
        &self.action
    }

    pub fn projectors(&self) -> &[Matrix] {
        &self.coaction
    }

    pub fn action_matrix(&self, g: &GroupElement) -> Result<&Matrix> {
        self.group.check(g)?;
        Ok(&self.action[self.group.index_of(g)])
    }

    pub fn projector(&self, g: &GroupElement) -> Result<&Matrix> {
        self.group.check(g)?;
        Ok(&self.coaction[self.group.index_of(g)])
    }

    /// Whether `coprod[k][i][j] = coprod[k][j][i]` throughout.
    pub fn is_cocommutative(&self) -> bool {
        self.coprod.iter().all(|terms| {
            let mut t = Tensor2::zero(self.dim);
            for (i, j, c) in terms {
                t.add_term(*i, *j, c);
            }
            t == t.flip()
        })
    }

    fn check_elem(&self, a: &AlgElement) -> Result<()> {
        if a.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: a.dim() })
        }
    }

    fn check_tensor(&self, t: &Tensor2) -> Result<()> {
        if t.dim == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, found: t.dim })
        }
    }

    fn mul_raw(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        let n = self.dim;
        let mut out = AlgElement::zero(n);
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for (k, c) in &self.mult[i * n + j] {
                    out.coeffs[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    fn mul_basis(&self, i: usize, j: usize) -> AlgElement {
        let mut out = AlgElement::zero(self.dim);
        for (k, c) in &self.mult[i * self.dim + j] {
            out.coeffs[*k] = c.clone();
        }
        out
    }

    pub fn multiply(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.mul_raw(a, b))
    }

    fn coprod_raw(&self, a: &AlgElement) -> Tensor2 {
        let mut t = Tensor2::zero(self.dim);
        for k in a.support() {
            for (i, j, c) in &self.coprod[k] {
                t.add_term(*i, *j, &(&a.coeffs[k] * c));
            }
        }
        t
    }

    pub fn coprod_expand(&self, a: &AlgElement) -> Result<Tensor2> {
        self.check_elem(a)?;
        Ok(self.coprod_raw(a))
    }

    fn counit_raw(&self, a: &AlgElement) -> Scalar {
        a.support().into_iter().map(|i| &a.coeffs[i] * &self.counit[i]).sum()
    }

    pub fn counit_eval(&self, a: &AlgElement) -> Result<Scalar> {
        self.check_elem(a)?;
        Ok(self.counit_raw(a))
    }

    pub fn antipode_eval(&self, a: &AlgElement) -> Result<AlgElement> {
        self.check_elem(a)?;
        Ok(AlgElement::new(self.antipode.mul_vec(&a.coeffs)))
    }

    /// `g.a = φ_g(a)`.
    pub fn act(&self, g: &GroupElement, a: &AlgElement) -> Result<AlgElement> {
        self.check_elem(a)?;
        Ok(AlgElement::new(self.action_matrix(g)?.mul_vec(&a.coeffs)))
    }

    /// The `g`-homogeneous part `π_g(a)`.
    pub fn coact_component(&self, g: &GroupElement, a: &AlgElement) -> Result<AlgElement> {
        self.check_elem(a)?;
        Ok(AlgElement::new(self.projector(g)?.mul_vec(&a.coeffs)))
    }

    /// `σ(a ⊗ b) = Σ_g φ_g(b) ⊗ π_g(a)`.
    pub fn quasisymmetry(&self, a: &AlgElement, b: &AlgElement) -> Result<Tensor2> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        self.quasisymmetry_tensor(&Tensor2::pure(a, b))
    }

    pub fn quasisymmetry_tensor(&self, t: &Tensor2) -> Result<Tensor2> {
        self.check_tensor(t)?;
        let n = self.dim;
        let mut out = Tensor2::zero(n);
        for (j, k, c) in t.terms() {
            for (p, q, s) in &self.braid[j * n + k] {
                out.add_term(*p, *q, &(c * s));
            }
        }
        Ok(out)
    }

    /// `σ⁻¹(w ⊗ v) = Σ_g π_g(v) ⊗ φ_{g⁻¹}(w)`.
    pub fn quasisymmetry_inverse(&self, t: &Tensor2) -> Result<Tensor2> {
        self.check_tensor(t)?;
        let mut out = Tensor2::zero(self.dim);
        for (gi, g) in self.group.elements().iter().enumerate() {
            let phi_inv = &self.action[self.group.index_of(&self.group.inverse(g))];
            out = &out + &t.apply(phi_inv, &self.coaction[gi]).flip();
        }
        Ok(out)
    }

    /// The product of `A ⊗̂ A`: `(a ⊗ b)(c ⊗ d) = a σ(b ⊗ c) d`, extended
    /// bilinearly.
    pub fn braided_tensor_multiply(&self, x: &Tensor2, y: &Tensor2) -> Result<Tensor2> {
        self.check_tensor(x)?;
        self.check_tensor(y)?;
        Ok(self.braided_raw(x, y))
    }

    fn braided_raw(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let n = self.dim;
        // w[(i·n + p)·n² + q·n + l] collects the coefficient of (eᵢe_p) ⊗ (e_q e_l)
        let mut w: Vec<Scalar> = vec![Scalar::zero(); n * n * n * n];
        let y_terms: Vec<(usize, usize, &Scalar)> = y.terms().collect();
        for (i, j, xc) in x.terms() {
            for &(k, l, yc) in &y_terms {
                let braid = &self.braid[j * n + k];
                if braid.is_empty() {
                    continue;
                }
                let xy = xc * yc;
                for (p, q, s) in braid {
                    w[(i * n + p) * n * n + q * n + l] += &(&xy * s);
                }
            }
        }
        let mut out = Tensor2::zero(n);
        for (idx, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (ip, ql) = (idx / (n * n), idx % (n * n));
            let (i, p, q, l) = (ip / n, ip % n, ql / n, ql % n);
            for (r, c1) in &self.mult[i * n + p] {
                let cc = c * c1;
                for (s, c2) in &self.mult[q * n + l] {
                    out.add_term(*r, *s, &(&cc * c2));
                }
            }
        }
        out
    }

    /// `ψ_γ = Σ_g γ(g) π_g`, i.e. `a ↦ γ(a⁽¹⁾) a⁽²⁾`.
    pub fn psi_operator(&self, gamma: &Character) -> Result<Matrix> {
        if gamma.values.len() != self.group.rank() {
            return Err(Error::DimensionMismatch { expected: self.group.rank(), found: gamma.values.len() });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (gi, g) in self.group.elements().iter().enumerate() {
            m = &m + &self.coaction[gi].scale(&gamma.eval(g));
        }
        Ok(m)
    }

    /// Decides triviality of `σ` on `V ⊗ V` and complete triviality of the
    /// action and coaction on `V`, for `V` spanned by `subspace` (the whole
    /// algebra when `None`).
    pub fn triviality_status(&self, subspace: Option<&[AlgElement]>) -> Result<TrivialityStatus> {
        let basis: Vec<AlgElement> = match subspace {
            Some(s) => s.to_vec(),
            None => (0..self.dim).map(|i| self.basis(i)).collect(),
        };
        for v in &basis {
            self.check_elem(v)?;
        }
        let mut trivial = true;
        'outer: for a in &basis {
            for b in &basis {
                if self.quasisymmetry(a, b)? != Tensor2::pure(b, a) {
                    trivial = false;
                    break 'outer;
                }
            }
        }
        let invariant = basis.iter().all(|v| self.action.iter().all(|phi| phi.mul_vec(&v.coeffs) == v.coeffs));
        let coinvariant = basis.iter().all(|v| self.coaction[0].mul_vec(&v.coeffs) == v.coeffs);
        Ok(TrivialityStatus { trivial, completely_trivial: invariant && coinvariant })
    }

    /// The same structure in a new basis; column `j` of `change` holds the
    /// old coordinates of the `j`-th new basis vector.
    pub fn change_basis(&self, change: &Matrix, labels: Vec<String>) -> Result<YDAlgebra> {
        let n = self.dim;
        if change.rows() != n || change.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: change.rows() });
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: labels.len() });
        }
        let inv = change.inverse().ok_or_else(|| Error::Malformed("basis change is singular".into()))?;
        let b: Vec<AlgElement> = (0..n).map(|j| AlgElement::new(change.column(j))).collect();
        let coords = |v: &AlgElement| inv.mul_vec(&v.coeffs);
        let mut mult = vec![vec![vec![]; n]; n];
        for i in 0..n {
            for j in 0..n {
                mult[i][j] = coords(&self.mul_raw(&b[i], &b[j]));
            }
        }
        let mut coprod = Vec::with_capacity(n);
        for bk in &b {
            let t = self.coprod_raw(bk).apply(&inv, &inv);
            coprod.push((0..n).map(|i| (0..n).map(|j| t.get(i, j).clone()).collect()).collect());
        }
        let conj = |m: &Matrix| &(&inv * m) * change;
        let tag = |ms: &[Matrix]| {
            ms.iter().enumerate().map(|(i, m)| GroupMatrix { g: self.group.element(i), matrix: conj(m) }).collect()
        };
        YDAlgebra::from_parts(YDParts {
            dim: n,
            labels,
            group: self.group.clone(),
            mult,
            unit: coords(&self.unit),
            coprod,
            counit: b.iter().map(|v| self.counit_raw(v)).collect(),
            antipode: conj(&self.antipode),
            action: tag(&self.action),
            coaction: tag(&self.coaction),
        })
    }

    /// Renders a vector as a linear combination of basis labels.
    pub fn format(&self, a: &AlgElement) -> String {
        format_combination(a.coeffs(), &self.labels)
    }

    pub fn format_tensor(&self, t: &Tensor2) -> String {
        let mut labels = Vec::with_capacity(self.dim * self.dim);
        for a in &self.labels {
            for b in &self.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        format_combination(t.coeffs(), &labels)
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        self.verify_axioms_with(VerifyOptions::default())
    }

    pub fn verify_axioms_with(&self, opts: VerifyOptions) -> AxiomReport {
        let mut verdicts: Vec<AxiomVerdict> =
            Axiom::ALL.iter().map(|&axiom| AxiomVerdict { axiom, holds: None, witness: None }).collect();
        // cheap checks first so that fail-fast sweeps stay fast
        let order = [
            Axiom::Coaction,
            Axiom::Action,
            Axiom::Dimodule,
            Axiom::Algebra,
            Axiom::Coalgebra,
            Axiom::Antipode,
            Axiom::AntipodeEquivariance,
            Axiom::Equivariance,
            Axiom::Bialgebra,
        ];
        for axiom in order {
            let witness = match axiom {
                Axiom::Algebra => self.check_algebra(),
                Axiom::Coalgebra => self.check_coalgebra(),
                Axiom::Action => self.check_action(),
                Axiom::Coaction => self.check_coaction(),
                Axiom::Dimodule => self.check_dimodule(),
                Axiom::Bialgebra => self.check_bialgebra(),
                Axiom::Equivariance => self.check_equivariance(),
                Axiom::Antipode => self.check_antipode(),
                Axiom::AntipodeEquivariance => self.check_antipode_equivariance(),
            };
            let v = &mut verdicts[axiom as usize];
            v.holds = Some(witness.is_none());
            v.witness = witness;
            if opts.fail_fast && v.holds == Some(false) {
                break;
            }
        }
        AxiomReport { verdicts }
    }

    fn names(&self, idx: &[usize]) -> String {
        idx.iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join(", ")
    }

    fn witness(&self, law: &str, at: String, indices: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> Option<Witness> {
        Some(Witness { law: law.to_string(), at, indices, lhs: lhs.to_vec(), rhs: rhs.to_vec() })
    }

    fn check_algebra(&self) -> Option<Witness> {
        let n = self.dim;
        for i in 0..n {
            let e = self.basis(i);
            let l = self.mul_raw(&self.unit, &e);
            if l != e {
                return self.witness("1·a = a", self.names(&[i]), vec![i], &l.coeffs, &e.coeffs);
            }
            let r = self.mul_raw(&e, &self.unit);
            if r != e {
                return self.witness("a·1 = a", self.names(&[i]), vec![i], &r.coeffs, &e.coeffs);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let lhs = self.mul_raw(&ij, &self.basis(k));
                    let rhs = self.mul_raw(&self.basis(i), &self.mul_basis(j, k));
                    if lhs != rhs {
                        return self.witness(
                            "(ab)c = a(bc)",
                            self.names(&[i, j, k]),
                            vec![i, j, k],
                            &lhs.coeffs,
                            &rhs.coeffs,
                        );
                    }
                }
            }
        }
        None
    }

    fn check_coalgebra(&self) -> Option<Witness> {
        let n = self.dim;
        for k in 0..n {
            let d = &self.coprod[k];
            let mut left = AlgElement::zero(n);
            let mut right = AlgElement::zero(n);
            for (i, j, c) in d {
                left.coeffs[*j] += &(c * &self.counit[*i]);
                right.coeffs[*i] += &(c * &self.counit[*j]);
            }
            let e = self.basis(k);
            if left != e {
                return self.witness("(ε⊗id)Δ(a) = a", self.names(&[k]), vec![k], &left.coeffs, &e.coeffs);
            }
            if right != e {
                return self.witness("(id⊗ε)Δ(a) = a", self.names(&[k]), vec![k], &right.coeffs, &e.coeffs);
            }
            let mut lhs = vec![Scalar::zero(); n * n * n];
            let mut rhs = vec![Scalar::zero(); n * n * n];
            for (i, j, c) in d {
                for (p, q, c2) in &self.coprod[*i] {
                    lhs[(p * n + q) * n + j] += &(c * c2);
                }
                for (p, q, c2) in &self.coprod[*j] {
                    rhs[(i * n + p) * n + q] += &(c * c2);
                }
            }
            if lhs != rhs {
                return self.witness("(Δ⊗id)Δ(a) = (id⊗Δ)Δ(a)", self.names(&[k]), vec![k], &lhs, &rhs);
            }
        }
        None
    }

    fn check_action(&self) -> Option<Witness> {
        let grp = &self.group;
        let els = grp.elements();
        let id = Matrix::identity(self.dim);
        if self.action[0] != id {
            return self.witness(
                "φ_1 = id",
                "g = 1".into(),
                vec![0],
                self.action[0].to_rows().concat().as_slice(),
                &id.to_rows().concat(),
            );
        }
        for (a, g) in els.iter().enumerate() {
            for (b, h) in els.iter().enumerate() {
                let lhs = &self.action[a] * &self.action[b];
                let gh = grp.index_of(&grp.op(g, h));
                if lhs != self.action[gh] {
                    return self.witness(
                        "φ_g φ_h = φ_{gh}",
                        format!("g = {g}, h = {h}"),
                        vec![a, b],
                        &lhs.to_rows().concat(),
                        &self.action[gh].to_rows().concat(),
                    );
                }
            }
        }
        for (a, g) in els.iter().enumerate() {
            let phi = &self.action[a];
            let u = AlgElement::new(phi.mul_vec(&self.unit.coeffs));
            if u != self.unit {
                return self.witness("g.1 = 1", format!("g = {g}"), vec![a], &u.coeffs, &self.unit.coeffs);
            }
            let images: Vec<AlgElement> = (0..self.dim).map(|i| AlgElement::new(phi.column(i))).collect();
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let lhs = AlgElement::new(phi.mul_vec(&self.mul_basis(i, j).coeffs));
                    let rhs = self.mul_raw(&images[i], &images[j]);
                    if lhs != rhs {
                        return self.witness(
                            "g.(ab) = (g.a)(g.b)",
                            format!("g = {g}; {}", self.names(&[i, j])),
                            vec![a, i, j],
                            &lhs.coeffs,
                            &rhs.coeffs,
                        );
                    }
                }
            }
        }
        None
    }

    fn check_coaction(&self) -> Option<Witness> {
        let els = self.group.elements();
        let mut sum = Matrix::zeros(self.dim, self.dim);
        for p in &self.coaction {
            sum = &sum + p;
        }
        let id = Matrix::identity(self.dim);
        if sum != id {
            return self.witness(
                "Σ_g π_g = id",
                String::new(),
                vec![],
                &sum.to_rows().concat(),
                &id.to_rows().concat(),
            );
        }
        for (a, g) in els.iter().enumerate() {
            for (b, h) in els.iter().enumerate() {
                let lhs = &self.coaction[a] * &self.coaction[b];
                let rhs = if a == b { self.coaction[a].clone() } else { Matrix::zeros(self.dim, self.dim) };
                if lhs != rhs {
                    return self.witness(
                        "π_g π_h = δ_{g,h} π_g",
                        format!("g = {g}, h = {h}"),
                        vec![a, b],
                        &lhs.to_rows().concat(),
                        &rhs.to_rows().concat(),
                    );
                }
            }
        }
        None
    }

    fn check_dimodule(&self) -> Option<Witness> {
        let els = self.group.elements();
        for (a, g) in els.iter().enumerate() {
            for (b, h) in els.iter().enumerate() {
                let lhs = &self.action[a] * &self.coaction[b];
                let rhs = &self.coaction[b] * &self.action[a];
                if lhs != rhs {
                    return self.witness(
                        "φ_g π_h = π_h φ_g",
                        format!("g = {g}, h = {h}"),
                        vec![a, b],
                        &lhs.to_rows().concat(),
                        &rhs.to_rows().concat(),
                    );
                }
            }
        }
        None
    }

    fn check_bialgebra(&self) -> Option<Witness> {
        let n = self.dim;
        let one = Scalar::one();
        let eu = self.counit_raw(&self.unit);
        if eu != one {
            return self.witness("ε(1) = 1", String::new(), vec![], &[eu], &[one]);
        }
        let du = self.coprod_raw(&self.unit);
        let uu = Tensor2::pure(&self.unit, &self.unit);
        if du != uu {
            return self.witness("Δ(1) = 1⊗1", String::new(), vec![], &du.coeffs, &uu.coeffs);
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.counit_raw(&self.mul_basis(i, j));
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    return self.witness("ε(ab) = ε(a)ε(b)", self.names(&[i, j]), vec![i, j], &[lhs], &[rhs]);
                }
            }
        }
        let deltas: Vec<Tensor2> = (0..n).map(|k| self.coprod_raw(&self.basis(k))).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.coprod_raw(&self.mul_basis(i, j));
                let rhs = self.braided_raw(&deltas[i], &deltas[j]);
                if lhs != rhs {
                    return self.witness(
                        "Δ(ab) = Δ(a)Δ(b) in A⊗̂A",
                        self.names(&[i, j]),
                        vec![i, j],
                        &lhs.coeffs,
                        &rhs.coeffs,
                    );
                }
            }
        }
        None
    }

    fn check_equivariance(&self) -> Option<Witness> {
        let n = self.dim;
        let grp = &self.group;
        let els = grp.elements();
        let basis: Vec<AlgElement> = (0..n).map(|i| self.basis(i)).collect();
        let deltas: Vec<Tensor2> = basis.iter().map(|b| self.coprod_raw(b)).collect();
        let proj = |a: usize, v: &AlgElement| AlgElement::new(self.coaction[a].mul_vec(&v.coeffs));
        // pairs (h, h') with hh' = g, by index of g
        let mut splits: Vec<Vec<(usize, usize)>> = vec![Vec::new(); els.len()];
        for (a, h) in els.iter().enumerate() {
            for (b, h2) in els.iter().enumerate() {
                splits[grp.index_of(&grp.op(h, h2))].push((a, b));
            }
        }
        for (a, g) in els.iter().enumerate() {
            let phi = &self.action[a];
            let pi = &self.coaction[a];
            let pu = proj(a, &self.unit);
            let expect_u = if a == 0 { self.unit.clone() } else { AlgElement::zero(n) };
            if pu != expect_u {
                return self.witness("π_g(1) = δ_{g,1}·1", format!("g = {g}"), vec![a], &pu.coeffs, &expect_u.coeffs);
            }
            for k in 0..n {
                let ga = AlgElement::new(phi.column(k));
                // ε is linear and colinear
                let lhs = self.counit_raw(&ga);
                if lhs != self.counit[k] {
                    return self.witness(
                        "ε(g.a) = ε(a)",
                        format!("g = {g}; {}", self.names(&[k])),
                        vec![a, k],
                        &[lhs],
                        &[self.counit[k].clone()],
                    );
                }
                let lhs = self.counit_raw(&AlgElement::new(pi.column(k)));
                let rhs = if a == 0 { self.counit[k].clone() } else { Scalar::zero() };
                if lhs != rhs {
                    return self.witness(
                        "ε(π_g a) = δ_{g,1}ε(a)",
                        format!("g = {g}; {}", self.names(&[k])),
                        vec![a, k],
                        &[lhs],
                        &[rhs],
                    );
                }
                // Δ is linear and colinear
                let lhs = self.coprod_raw(&ga);
                let rhs = deltas[k].apply(phi, phi);
                if lhs != rhs {
                    return self.witness(
                        "Δ(g.a) = (g⊗g)Δ(a)",
                        format!("g = {g}; {}", self.names(&[k])),
                        vec![a, k],
                        &lhs.coeffs,
                        &rhs.coeffs,
                    );
                }
                let lhs = self.coprod_raw(&AlgElement::new(pi.column(k)));
                let mut rhs = Tensor2::zero(n);
                for &(h, h2) in &splits[a] {
                    rhs = &rhs + &deltas[k].apply(&self.coaction[h], &self.coaction[h2]);
                }
                if lhs != rhs {
                    return self.witness(
                        "Δ(π_g a) = Σ_{hh'=g} (π_h⊗π_h')Δ(a)",
                        format!("g = {g}; {}", self.names(&[k])),
                        vec![a, k],
                        &lhs.coeffs,
                        &rhs.coeffs,
                    );
                }
            }
            // μ is linear and colinear
            for i in 0..n {
                for j in 0..n {
                    let ij = self.mul_basis(i, j);
                    let lhs = AlgElement::new(phi.mul_vec(&ij.coeffs));
                    let rhs = self.mul_raw(&AlgElement::new(phi.column(i)), &AlgElement::new(phi.column(j)));
                    if lhs != rhs {
                        return self.witness(
                            "g.(ab) = (g.a)(g.b)",
                            format!("g = {g}; {}", self.names(&[i, j])),
                            vec![a, i, j],
                            &lhs.coeffs,
                            &rhs.coeffs,
                        );
                    }
                    let lhs = proj(a, &ij);
                    let mut rhs = AlgElement::zero(n);
                    for &(h, h2) in &splits[a] {
                        let p = proj(h, &basis[i]);
                        if p.is_zero() {
                            continue;
                        }
                        let q = proj(h2, &basis[j]);
                        if !q.is_zero() {
                            rhs.axpy(&Scalar::one(), &self.mul_raw(&p, &q));
                        }
                    }
                    if lhs != rhs {
                        return self.witness(
                            "π_g(ab) = Σ_{hh'=g} π_h(a)π_h'(b)",
                            format!("g = {g}; {}", self.names(&[i, j])),
                            vec![a, i, j],
                            &lhs.coeffs,
                            &rhs.coeffs,
                        );
                    }
                }
            }
        }
        None
    }

    fn check_antipode(&self) -> Option<Witness> {
        let n = self.dim;
        let images: Vec<AlgElement> = (0..n).map(|i| AlgElement::new(self.antipode.column(i))).collect();
        for k in 0..n {
            let expect = self.unit.scale(&self.counit[k]);
            let mut left = AlgElement::zero(n);
            let mut right = AlgElement::zero(n);
            for (i, j, c) in &self.coprod[k] {
                left.axpy(c, &self.mul_raw(&images[*i], &self.basis(*j)));
                right.axpy(c, &self.mul_raw(&self.basis(*i), &images[*j]));
            }
            if left != expect {
                return self.witness("S(a₍₁₎)a₍₂₎ = ε(a)1", self.names(&[k]), vec![k], &left.coeffs, &expect.coeffs);
            }
            if right != expect {
                return self.witness("a₍₁₎S(a₍₂₎) = ε(a)1", self.names(&[k]), vec![k], &right.coeffs, &expect.coeffs);
            }
        }
        None
    }

    fn check_antipode_equivariance(&self) -> Option<Witness> {
        for (a, g) in self.group.elements().iter().enumerate() {
            for (m, law) in [(&self.action[a], "S φ_g = φ_g S"), (&self.coaction[a], "S π_g = π_g S")] {
                let lhs = &self.antipode * m;
                let rhs = m * &self.antipode;
                if lhs != rhs {
                    return self.witness(
                        law,
                        format!("g = {g}"),
                        vec![a],
                        &lhs.to_rows().concat(),
                        &rhs.to_rows().concat(),
                    );
                }
            }
        }
        None
    }
}

fn braid_table(n: usize, action: &[Matrix], coaction: &[Matrix]) -> Vec<Sparse2> {
    let mut table = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            let mut t = Tensor2::zero(n);
            for (phi, pi) in action.iter().zip(coaction) {
                for q in 0..n {
                    let pq = pi.get(q, j);
                    if pq.is_zero() {
                        continue;
                    }
                    for p in 0..n {
                        let fp = phi.get(p, k);
                        if !fp.is_zero() {
                            t.add_term(p, q, &(fp * pq));
                        }
                    }
                }
            }
            table.push(t.terms().map(|(p, q, c)| (p, q, c.clone())).collect());
        }
    }
    table
}

/// Renders `Σ cᵢ·labelᵢ`, e.g. `1/2·x + (1/2 - 1/2·ι)·x^3`.
pub fn format_combination(coeffs: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let neg_unit = -c.clone();
        let term = if c.is_one() {
            l.clone()
        } else if neg_unit.is_one() {
            format!("-{l}")
        } else if s.contains(' ') {
            format!("({s})·{l}")
        } else {
            format!("{s}·{l}")
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out = format!("{out} - {rest}");
        } else {
            out = format!("{out} + {term}");
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Stop at the first failing check; later checks are reported as not run.
    pub fail_fast: bool,
}

/// The nine checks of the verifier, listed (a) to (i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Algebra,
    Coalgebra,
    Action,
    Coaction,
    Dimodule,
    Bialgebra,
    Equivariance,
    Antipode,
    AntipodeEquivariance,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::Algebra,
        Axiom::Coalgebra,
        Axiom::Action,
        Axiom::Coaction,
        Axiom::Dimodule,
        Axiom::Bialgebra,
        Axiom::Equivariance,
        Axiom::Antipode,
        Axiom::AntipodeEquivariance,
    ];

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn description(self) -> &'static str {
        match self {
            Axiom::Algebra => "associativity and unit",
            Axiom::Coalgebra => "coassociativity and counit",
            Axiom::Action => "group action by algebra automorphisms",
            Axiom::Coaction => "coaction is a G-grading",
            Axiom::Dimodule => "dimodule condition",
            Axiom::Bialgebra => "Δ and ε are algebra maps into A⊗̂A and K",
            Axiom::Equivariance => "H-linearity and H-colinearity of μ, 1, Δ, ε",
            Axiom::Antipode => "antipode convolution law",
            Axiom::AntipodeEquivariance => "antipode is H-linear and H-colinear",
        }
    }
}

/// Two unequal sides of a law, located at specific basis (or group) indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub law: String,
    pub at: String,
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    /// `None` when the check was skipped after an earlier failure.
    pub holds: Option<bool>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub verdicts: Vec<AxiomVerdict>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds == Some(true))
    }

    pub fn verdict(&self, axiom: Axiom) -> &AxiomVerdict {
        &self.verdicts[axiom as usize]
    }

    pub fn holds(&self, axiom: Axiom) -> Option<bool> {
        self.verdict(axiom).holds
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.verdicts.iter().filter(|v| v.holds == Some(false))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            let status = match v.holds {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "not run",
            };
            writeln!(f, "({}) {:<46} {status}", v.axiom.letter(), v.axiom.description())?;
            if let Some(w) = &v.witness {
                writeln!(f, "    law: {}", w.law)?;
                if !w.at.is_empty() {
                    writeln!(f, "    at:  {}", w.at)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialityStatus {
    pub trivial: bool,
    pub completely_trivial: bool,
}
