//! Group-like elements: detection, enumeration, stabilizer groups, products
//! of group-likes, and the core of a group-like element.
//!
//! Everything past enumeration works inside a [`GroupLikeContext`], which
//! rewrites the algebra in a basis of group-like elements so that the group
//! actions `φ_g` and `ψ_γ` become permutations of basis indices.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian::{quotient_group, Character, FinAbGroup, GroupElement, QuotientGroup};
use crate::cyclofield::{self, Scalar};
use crate::error::{Error, Result};
use crate::examples::{pretty_label, BasisChange};
use crate::linalg::{rank_of, same_span, Matrix};
use crate::ydcore::{format_combination, AlgElement, AxiomReport, GroupMatrix, Tensor2, YDAlgebra, YDParts};

pub const DEFAULT_GRID_BOUND: u32 = 4;

/// `Δ(a) = a ⊗ a` and `ε(a) = 1`.
pub fn is_grouplike(a: &YDAlgebra, x: &AlgElement) -> Result<bool> {
    let d = a.coprod_expand(x)?;
    Ok(a.counit_eval(x)?.is_one() && d == Tensor2::pure(x, x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupLikeSet {
    pub elements: Vec<AlgElement>,
    pub is_basis: bool,
}

impl GroupLikeSet {
    pub fn to_basis(&self, labels: Vec<String>) -> Result<BasisChange> {
        if !self.is_basis {
            return Err(Error::BasisUnavailable(format!(
                "only {} independent group-like elements",
                self.elements.len()
            )));
        }
        let n = self.elements.len();
        let cols: Vec<Vec<Scalar>> = self.elements.iter().map(|e| e.coeffs().to_vec()).collect();
        BasisChange::new(Matrix::from_columns(n, &cols)?, labels)
    }
}

pub fn enumerate_grouplikes(a: &YDAlgebra) -> Result<GroupLikeSet> {
    enumerate_grouplikes_with(a, DEFAULT_GRID_BOUND)
}

/// Finds the group-like elements as the common eigenvectors of the
/// operators `Lᵢ = (eᵢ* ⊗ id)∘Δ`. On a group-like `γ`, `Lᵢ` acts by the
/// scalar `γᵢ`, so eigenvalues are searched among the grid
/// `(a₀ + a₁ξ + a₂ξ² + a₃ξ³)/d`, `|aᵢ| ≤ bound`, `d ∈ {1, 2, 4}`.
pub fn enumerate_grouplikes_with(a: &YDAlgebra, bound: u32) -> Result<GroupLikeSet> {
    if !a.is_cocommutative() {
        return Err(Error::NotCocommutative);
    }
    let n = a.dim();
    let deltas: Vec<Tensor2> = (0..n).map(|k| a.coprod_expand(&a.basis(k))).collect::<Result<_>>()?;
    let ops: Vec<Matrix> = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(n, n);
            for (k, d) in deltas.iter().enumerate() {
                for q in 0..n {
                    m.set(q, k, d.get(i, q).clone());
                }
            }
            m
        })
        .collect();
    let grid = Grid::new(bound);
    let mut spaces: Vec<Vec<Vec<Scalar>>> = vec![(0..n).map(|i| a.basis(i).into_coeffs()).collect()];
    for op in &ops {
        let mut next = Vec::new();
        for w in spaces {
            if w.len() <= 1 {
                next.push(w);
            } else {
                next.extend(split(op, &w, &grid)?);
            }
        }
        spaces = next;
    }
    let mut elements = Vec::new();
    for w in spaces.iter().filter(|w| w.len() == 1) {
        let v = AlgElement::new(w[0].clone());
        let e = a.counit_eval(&v)?;
        if e.is_zero() {
            continue;
        }
        let g = v.scale(&e.inv()?);
        if is_grouplike(a, &g)? {
            elements.push(g);
        }
    }
    let vecs: Vec<Vec<Scalar>> = elements.iter().map(|e| e.coeffs().to_vec()).collect();
    let is_basis = elements.len() == n && rank_of(&vecs) == n;
    Ok(GroupLikeSet { elements, is_basis })
}

const PRIMES: [u64; 3] = [998_244_353, 754_974_721, 167_772_161];

fn eighth_root(p: u64) -> u64 {
    (2..)
        .map(|a| cyclofield::pow_mod(a, (p - 1) / 8, p))
        .find(|&t| cyclofield::pow_mod(t, 4, p) == p - 1)
        .expect("p ≡ 1 mod 8")
}

struct Grid {
    bound: u32,
    candidates: Vec<Scalar>,
}

impl Grid {
    fn new(bound: u32) -> Self {
        let b = bound as i64;
        let mut candidates = Vec::new();
        for den in [1i64, 2, 4] {
            for a0 in -b..=b {
                for a1 in -b..=b {
                    for a2 in -b..=b {
                        for a3 in -b..=b {
                            let c = [a0, a1, a2, a3];
                            // skip fractions that reduce to a smaller denominator
                            if den == 1 || c.iter().any(|x| x % 2 != 0) {
                                candidates.push(Scalar::from_ints(c, den));
                            }
                        }
                    }
                }
            }
        }
        Grid { bound, candidates }
    }

    fn residues(&self, p: u64, xi: u64) -> Vec<u64> {
        self.candidates.iter().map(|c| c.reduce_mod(p, xi).expect("grid denominators are small")).collect()
    }
}

/// Coefficients `c₀..c_d` of `det(λI − M)` over `F_p` (Faddeev-LeVerrier).
fn charpoly_mod(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let d = m.len();
    let mul = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Vec<Vec<u64>> {
        (0..d)
            .map(|i| {
                (0..d).map(|j| (0..d).fold(0, |acc, k| (acc + cyclofield::mul_mod(a[i][k], b[k][j], p)) % p)).collect()
            })
            .collect()
    };
    let mut c = vec![0u64; d + 1];
    c[d] = 1;
    let mut mk = vec![vec![0u64; d]; d];
    for k in 1..=d {
        let mut next = mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = (row[i] + c[d - k + 1]) % p;
        }
        mk = next;
        let am = mul(m, &mk);
        let tr = (0..d).fold(0, |acc, i| (acc + am[i][i]) % p);
        let kinv = cyclofield::inv_mod(k as u64 % p, p);
        c[d - k] = (p - cyclofield::mul_mod(tr, kinv, p)) % p;
    }
    c
}

fn eval_mod(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &ci| (cyclofield::mul_mod(acc, x, p) + ci) % p)
}

/// Splits an `op`-invariant subspace (given by spanning vectors) into
/// eigenspaces of `op`.
fn split(op: &Matrix, w: &[Vec<Scalar>], grid: &Grid) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let n = op.rows();
    let (r, pivots) = Matrix::from_rows(w.to_vec())?.rref();
    let d = pivots.len();
    let rows: Vec<Vec<Scalar>> = (0..d).map(|k| r.row(k).to_vec()).collect();
    // coordinates of op on the rref basis, read off at the pivot columns
    let mut m = Matrix::zeros(d, d);
    for (j, rj) in rows.iter().enumerate() {
        let img = op.mul_vec(rj);
        for (k, &pk) in pivots.iter().enumerate() {
            m.set(k, j, img[pk].clone());
        }
    }
    let candidates: Vec<&Scalar> = match modular_filter(&m, grid) {
        Some(idx) => idx.into_iter().map(|i| &grid.candidates[i]).collect(),
        None => grid.candidates.iter().collect(),
    };
    let mut spaces = Vec::new();
    let mut found = 0;
    for lambda in candidates {
        let mut shifted = m.clone();
        for i in 0..d {
            let v = shifted.get(i, i) - lambda;
            shifted.set(i, i, v);
        }
        let kernel = shifted.nullspace();
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        spaces.push(
            kernel
                .iter()
                .map(|c| {
                    let mut v = vec![Scalar::zero(); n];
                    for (k, ck) in c.iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for (x, rk) in v.iter_mut().zip(&rows[k]) {
                            *x += &(ck * rk);
                        }
                    }
                    v
                })
                .collect(),
        );
        if found == d {
            return Ok(spaces);
        }
    }
    Err(Error::CandidateExhausted { bound: grid.bound, dim: d })
}

/// Indices of grid candidates that are roots of the characteristic
/// polynomial modulo some prime; `None` if no prime reduces `m`.
fn modular_filter(m: &Matrix, grid: &Grid) -> Option<Vec<usize>> {
    let d = m.rows();
    for p in PRIMES {
        let xi = eighth_root(p);
        let reduced: Option<Vec<Vec<u64>>> =
            (0..d).map(|i| (0..d).map(|j| m.get(i, j).reduce_mod(p, xi)).collect()).collect();
        let Some(reduced) = reduced else { continue };
        let c = charpoly_mod(&reduced, p);
        let res = grid.residues(p, xi);
        return Some((0..res.len()).filter(|&i| eval_mod(&c, res[i], p) == 0).collect());
    }
    None
}

/// The unique index `j` with `v = e_j`, if any.
fn unit_index(v: &[Scalar]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nz.as_slice() {
        [j] if v[*j].is_one() => Some(*j),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilizers {
    /// Inertia group `T_η = {g | φ_g(η) = η}`.
    pub t_eta: Vec<GroupElement>,
    /// Isotropy group `Q_η = {γ | ψ_γ(η) = η}`.
    pub q_eta: Vec<Character>,
    pub t_perp: Vec<Character>,
    pub q_perp: Vec<GroupElement>,
    /// `G_η = Q_η^⊥ / (T_η ∩ Q_η^⊥)`.
    pub index_group: FinAbGroup,
    pub index: usize,
    /// `|T_η^⊥ / (Q_η ∩ T_η^⊥)|`, which must equal `index`.
    pub symmetric_index: usize,
    /// Labels of `O_η = {φ_g(η) | g ∈ Q_η^⊥}`.
    pub orbit: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSpan {
    pub m: usize,
    /// Labels of the group-likes in the support of `ηη'`.
    pub omegas: Vec<String>,
    pub coefficients: Vec<Scalar>,
    /// `O = {ψ_γ(η) | γ ∈ T_{η'}^⊥}`.
    pub o: Vec<String>,
    /// `O' = {φ_g(η') | g ∈ Q_η^⊥}`.
    pub o_prime: Vec<String>,
    /// `|O| = |O'|` and `ηη'` has exactly that many nonzero coefficients.
    pub coeffs_nonzero: bool,
    /// Every product `η̃η̃'` with `η̃ ∈ O`, `η̃' ∈ O'` lies in the span of the
    /// support of `ηη'`.
    pub closed: bool,
}

impl ProductSpan {
    pub fn consistent(&self) -> bool {
        self.coeffs_nonzero && self.closed && self.o.len() == self.m && self.o_prime.len() == self.m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    /// `ηη'` is group-like.
    pub cond1: bool,
    /// `Q_η^⊥ ⊂ T_{η'}`.
    pub cond2: bool,
    /// `σ(η ⊗ η') = η' ⊗ η`.
    pub cond3: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub holds: bool,
    pub witness: Option<String>,
}

/// `g.ω ≠ ω` for some group element and core basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionWitness {
    pub g: GroupElement,
    pub element: String,
    pub image: AlgElement,
    pub rendered: String,
}

/// A core basis element that is not coinvariant, with all its nonzero
/// homogeneous components `π_g(ω)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoactionWitness {
    pub element: String,
    pub components: Vec<(GroupElement, AlgElement)>,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub eta: String,
    pub stabilizers: Stabilizers,
    pub eta_prime: String,
    /// Every group-like occurring in `S(η)` with nonzero coefficient.
    pub eta_prime_candidates: Vec<String>,
    pub eta_prime_independent: bool,
    pub omega_basis: Vec<String>,
    pub m: usize,
    pub cross_checks: Vec<CrossCheck>,
    pub index_matches: bool,
    pub trivial: bool,
    pub completely_trivial: bool,
    pub action_witness: Option<ActionWitness>,
    pub coaction_witness: Option<CoactionWitness>,
    /// Verification of the core as a YD Hopf algebra over `K[G_η]`.
    pub core_axioms: AxiomReport,
}

impl CoreReport {
    pub fn all_checks_pass(&self) -> bool {
        self.cross_checks.iter().all(|c| c.holds)
            && self.eta_prime_independent
            && self.index_matches
            && self.stabilizers.index == self.stabilizers.symmetric_index
            && self.core_axioms.all_pass()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureScan {
    pub all_cores_trivial: bool,
    pub all_checks_pass: bool,
    pub per_eta: Vec<CoreReport>,
}

/// An algebra together with a basis of group-like elements, rewritten in
/// that basis.
#[derive(Clone, Debug)]
pub struct GroupLikeContext {
    basis: BasisChange,
    gl: YDAlgebra,
    dual: Vec<Character>,
    /// `phi_perm[g][i]`: index of `φ_g(ηᵢ)`.
    phi_perm: Vec<Vec<usize>>,
    /// `psi_perm[γ][i]`: index of `ψ_γ(ηᵢ)`.
    psi_perm: Vec<Vec<usize>>,
    unit: Option<usize>,
}

fn permutation(m: &Matrix, what: &str) -> Result<Vec<usize>> {
    (0..m.cols())
        .map(|j| {
            unit_index(&m.column(j))
                .ok_or_else(|| Error::BasisUnavailable(format!("{what} does not permute the group-like basis")))
        })
        .collect()
}

impl GroupLikeContext {
    pub fn new(algebra: &YDAlgebra, basis: BasisChange) -> Result<Self> {
        if basis.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: basis.len() });
        }
        for e in basis.elements() {
            if !is_grouplike(algebra, &e)? {
                return Err(Error::NotGroupLike);
            }
        }
        let gl = algebra.change_basis(basis.matrix(), basis.labels().to_vec())?;
        let dual = gl.group().dual_group()?;
        let phi_perm =
            gl.action_matrices().iter().map(|m| permutation(m, "the group action")).collect::<Result<_>>()?;
        let psi_perm =
            dual.iter().map(|c| permutation(&gl.psi_operator(c)?, "the character action")).collect::<Result<_>>()?;
        let unit = unit_index(gl.unit().coeffs());
        Ok(GroupLikeContext { basis, gl, dual, phi_perm, psi_perm, unit })
    }

    /// Enumerates the group-likes of `algebra` and labels them `gl1, gl2, …`
    /// in the order found.
    pub fn discover(algebra: &YDAlgebra, bound: u32) -> Result<Self> {
        let set = enumerate_grouplikes_with(algebra, bound)?;
        let labels = (1..=set.elements.len()).map(|i| format!("gl{i}")).collect();
        GroupLikeContext::new(algebra, set.to_basis(labels)?)
    }

    pub fn basis(&self) -> &BasisChange {
        &self.basis
    }

    /// The algebra written in the group-like basis.
    pub fn grouplike_algebra(&self) -> &YDAlgebra {
        &self.gl
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis.labels()[i]
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.basis.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Index of a group-like element given in the algebra's original basis.
    pub fn index_of(&self, eta: &AlgElement) -> Result<usize> {
        if eta.dim() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), found: eta.dim() });
        }
        unit_index(self.basis.to_new(eta).coeffs()).ok_or(Error::NotGroupLike)
    }

    fn labels_of(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.label(i).to_string()).collect()
    }

    fn product(&self, i: usize, j: usize) -> AlgElement {
        self.gl.multiply(&self.gl.basis(i), &self.gl.basis(j)).expect("basis elements")
    }

    fn stabilizers_full(&self, e: usize) -> Result<(Stabilizers, QuotientGroup)> {
        let grp = self.gl.group();
        let els = grp.elements();
        let t_eta: Vec<GroupElement> =
            els.iter().enumerate().filter(|(a, _)| self.phi_perm[*a][e] == e).map(|(_, g)| g.clone()).collect();
        let q_eta: Vec<Character> =
            self.dual.iter().enumerate().filter(|(c, _)| self.psi_perm[*c][e] == e).map(|(_, g)| g.clone()).collect();
        let t_perp = grp.perp_of_elements(&t_eta)?;
        let q_perp = grp.perp_of_characters(&q_eta)?;
        let t_cap: Vec<GroupElement> = t_eta.iter().filter(|g| q_perp.contains(g)).cloned().collect();
        let quotient = quotient_group(grp, &q_perp, &t_cap)?;

        // the same computation on the character side, through exponent tuples
        let exps = |cs: &[Character]| -> Vec<GroupElement> {
            cs.iter().map(|c| grp.character_exponents(c).expect("character of G")).collect()
        };
        let t_perp_e = exps(&t_perp);
        let q_cap_e: Vec<GroupElement> = exps(&q_eta).into_iter().filter(|k| t_perp_e.contains(k)).collect();
        let symmetric_index = quotient_group(grp, &t_perp_e, &q_cap_e)?.order();

        let mut orbit = Vec::new();
        for g in &q_perp {
            let j = self.phi_perm[grp.index_of(g)][e];
            if !orbit.contains(&j) {
                orbit.push(j);
            }
        }
        let st = Stabilizers {
            t_eta,
            q_eta,
            t_perp,
            q_perp,
            index_group: quotient.group().clone(),
            index: quotient.order(),
            symmetric_index,
            orbit: self.labels_of(&orbit),
        };
        Ok((st, quotient))
    }

    pub fn stabilizers(&self, e: usize) -> Result<Stabilizers> {
        self.check_index(e)?;
        Ok(self.stabilizers_full(e)?.0)
    }

    fn check_index(&self, e: usize) -> Result<()> {
        if e < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownLabel(format!("group-like #{e}")))
        }
    }

    fn orbit_indices(&self, labels: &[String]) -> Vec<usize> {
        labels.iter().map(|l| self.basis.index_of(l).expect("own label")).collect()
    }

    pub fn product_span(&self, e: usize, e2: usize) -> Result<ProductSpan> {
        self.check_index(e)?;
        self.check_index(e2)?;
        let grp = self.gl.group();
        let st = self.stabilizers(e)?;
        let st2 = self.stabilizers(e2)?;
        let mut o = Vec::new();
        for c in &st2.t_perp {
            let ci = grp.character_index(c).expect("character of G");
            let j = self.psi_perm[ci][e];
            if !o.contains(&j) {
                o.push(j);
            }
        }
        let mut o_prime = Vec::new();
        for g in &st.q_perp {
            let j = self.phi_perm[grp.index_of(g)][e2];
            if !o_prime.contains(&j) {
                o_prime.push(j);
            }
        }
        let prod = self.product(e, e2);
        let support = prod.support();
        let support_set: BTreeSet<usize> = support.iter().copied().collect();
        let closed = o
            .iter()
            .all(|&a| o_prime.iter().all(|&b| self.product(a, b).support().iter().all(|k| support_set.contains(k))));
        Ok(ProductSpan {
            m: support.len(),
            omegas: self.labels_of(&support),
            coefficients: support.iter().map(|&k| prod.coeff(k).clone()).collect(),
            coeffs_nonzero: o.len() == o_prime.len() && support.len() == o.len(),
            closed,
            o: self.labels_of(&o),
            o_prime: self.labels_of(&o_prime),
        })
    }

    pub fn corollary_equivalence(&self, e: usize, e2: usize) -> Result<CorollaryCheck> {
        self.check_index(e)?;
        self.check_index(e2)?;
        let prod = self.product(e, e2);
        let cond1 = is_grouplike(&self.gl, &prod)?;
        let st = self.stabilizers(e)?;
        let st2 = self.stabilizers(e2)?;
        let cond2 = st.q_perp.iter().all(|g| st2.t_eta.contains(g));
        let (a, b) = (self.gl.basis(e), self.gl.basis(e2));
        let cond3 = self.gl.quasisymmetry(&a, &b)? == Tensor2::pure(&b, &a);
        Ok(CorollaryCheck { cond1, cond2, cond3, consistent: cond1 == cond2 && cond2 == cond3 })
    }

    /// Group-likes with nonzero coefficient in `S(η)`, in basis order.
    pub fn antipode_support(&self, e: usize) -> Vec<usize> {
        self.gl.antipode_eval(&self.gl.basis(e)).expect("basis element").support()
    }

    pub fn compute_core(&self, e: usize) -> Result<CoreReport> {
        self.check_index(e)?;
        let grp = self.gl.group().clone();
        let (st, quotient) = self.stabilizers_full(e)?;
        let candidates = self.antipode_support(e);
        let e2 = *candidates.first().ok_or_else(|| Error::Malformed("antipode of a group-like vanishes".into()))?;
        let span = self.product_span(e, e2)?;
        let omegas = self.orbit_indices(&span.omegas);
        let omega_set: BTreeSet<usize> = omegas.iter().copied().collect();
        let mut independent = true;
        for &c in &candidates[1..] {
            let other: BTreeSet<usize> = self.orbit_indices(&self.product_span(e, c)?.omegas).into_iter().collect();
            independent &= other == omega_set;
        }

        let st2 = self.stabilizers(e2)?;
        let mut checks = Vec::new();
        let mut push = |name: &str, witness: Option<String>| {
            checks.push(CrossCheck { name: name.to_string(), holds: witness.is_none(), witness });
        };

        push(
            "(i) T_η = T_η' and Q_η = Q_η'",
            (st.t_eta != st2.t_eta || st.q_eta != st2.q_eta)
                .then(|| format!("η = {}, η' = {}", self.label(e), self.label(e2))),
        );

        let mut w = None;
        for &k in &omegas {
            let sk = self.stabilizers(k)?;
            if !st.t_eta.iter().all(|g| sk.t_eta.contains(g)) || !st.q_eta.iter().all(|c| sk.q_eta.contains(c)) {
                w = Some(format!("ω = {}", self.label(k)));
                break;
            }
        }
        push("(ii) T_η ⊂ T_ωi and Q_η ⊂ Q_ωi", w);

        let mut w = None;
        'psi: for c in &st.t_perp {
            let ci = grp.character_index(c).expect("character of G");
            for &k in &omegas {
                let j = self.psi_perm[ci][k];
                if !omega_set.contains(&j) {
                    w = Some(format!("ψ_γ({}) = {} for γ = {c}", self.label(k), self.label(j)));
                    break 'psi;
                }
            }
        }
        push("(iii) {ωi} stable under ψ_γ, γ ∈ T_η^⊥", w);

        let mut w = None;
        'phi: for g in &st.q_perp {
            for &k in &omegas {
                let j = self.phi_perm[grp.index_of(g)][k];
                if !omega_set.contains(&j) {
                    w = Some(format!("{g}.{} = {}", self.label(k), self.label(j)));
                    break 'phi;
                }
            }
        }
        push("(iv) {ωi} stable under φ_g, g ∈ Q_η^⊥", w);

        push(
            "(v) 1 ∈ {ωi}",
            (!self.unit.is_some_and(|u| omega_set.contains(&u))).then(|| "unit not among the ωi".to_string()),
        );

        let mut w = None;
        'mult: for &a in &omegas {
            for &b in &omegas {
                if !self.product(a, b).support().iter().all(|k| omega_set.contains(k)) {
                    w = Some(format!("{}·{} leaves the span", self.label(a), self.label(b)));
                    break 'mult;
                }
            }
        }
        push("(vi) Span(ωi) is a subalgebra", w);

        let w = omegas.iter().find_map(|&k| {
            let s = self.gl.antipode_eval(&self.gl.basis(k)).expect("basis element");
            (!s.support().iter().all(|j| omega_set.contains(j)))
                .then(|| format!("S({}) leaves the span", self.label(k)))
        });
        push("(vii) Span(ωi) is stable under S", w);

        let phi_orbit: BTreeSet<usize> = st.q_perp.iter().map(|g| self.phi_perm[grp.index_of(g)][e]).collect();
        let psi_orbit: BTreeSet<usize> =
            st.t_perp.iter().map(|c| self.psi_perm[grp.character_index(c).expect("character of G")][e]).collect();
        push(
            "(viii) {φ_g(η) : g ∈ Q_η^⊥} = {ψ_γ(η) : γ ∈ T_η^⊥}",
            (phi_orbit != psi_orbit).then(|| {
                format!(
                    "{:?} vs {:?}",
                    self.labels_of(&phi_orbit.iter().copied().collect::<Vec<_>>()),
                    self.labels_of(&psi_orbit.iter().copied().collect::<Vec<_>>())
                )
            }),
        );

        let orbit_vecs: Vec<Vec<Scalar>> = phi_orbit.iter().map(|&k| self.gl.basis(k).into_coeffs()).collect();
        let left: Vec<Vec<Scalar>> = omegas.iter().map(|&k| self.product(k, e).into_coeffs()).collect();
        let right: Vec<Vec<Scalar>> = omegas.iter().map(|&k| self.product(e, k).into_coeffs()).collect();
        let w = if !same_span(&orbit_vecs, &left) {
            Some("Span(ωi η) differs from the orbit span".to_string())
        } else if !same_span(&orbit_vecs, &right) {
            Some("Span(η ωi) differs from the orbit span".to_string())
        } else {
            None
        };
        push("(ix) Span(φ_g(η)) = Span(ωi η) = Span(η ωi)", w);

        let core_vecs: Vec<AlgElement> = omegas.iter().map(|&k| self.gl.basis(k)).collect();
        let status = self.gl.triviality_status(Some(&core_vecs))?;
        let pretty: Vec<String> = self.basis.labels().iter().map(|l| pretty_label(l)).collect();

        let mut action_witness = None;
        'aw: for (a, g) in grp.elements().iter().enumerate() {
            for &k in &omegas {
                let j = self.phi_perm[a][k];
                if j != k {
                    let image = self.gl.basis(j);
                    action_witness = Some(ActionWitness {
                        g: g.clone(),
                        element: self.label(k).to_string(),
                        rendered: format!("g{}.{} = {}", a + 1, pretty[k], pretty[j]),
                        image,
                    });
                    break 'aw;
                }
            }
        }
        let mut coaction_witness = None;
        for &k in &omegas {
            let v = self.gl.basis(k);
            if self.gl.coact_component(&grp.identity(), &v)? == v {
                continue;
            }
            let mut components = Vec::new();
            for g in grp.elements() {
                let c = self.gl.coact_component(&g, &v)?;
                if !c.is_zero() {
                    components.push((g, c));
                }
            }
            let rendered = format!(
                "δ({}) = {}",
                pretty[k],
                components
                    .iter()
                    .map(|(g, c)| format!("g{} ⊗ ({})", grp.index_of(g) + 1, format_combination(c.coeffs(), &pretty)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            );
            coaction_witness = Some(CoactionWitness { element: self.label(k).to_string(), components, rendered });
            break;
        }

        let reps: Vec<GroupElement> =
            quotient.group().elements().iter().map(|q| quotient.representative(q).clone()).collect();
        let core_axioms = self.core_algebra(&omegas, &st, &quotient, &reps)?.verify_axioms();
        Ok(CoreReport {
            eta: self.label(e).to_string(),
            index_matches: st.index == omegas.len(),
            stabilizers: st,
            eta_prime: self.label(e2).to_string(),
            eta_prime_candidates: self.labels_of(&candidates),
            eta_prime_independent: independent,
            omega_basis: self.labels_of(&omegas),
            m: omegas.len(),
            cross_checks: checks,
            trivial: status.trivial,
            completely_trivial: status.completely_trivial,
            action_witness,
            coaction_witness,
            core_axioms,
        })
    }

    /// The core `Span(ω₁..ω_m)` as a YD Hopf algebra over `K[G_η]`: a class
    /// `q` acts through `φ_r` for its representative `r ∈ Q_η^⊥`, and the
    /// degree-`q` part is the image of `Σ_{t ∈ T_η} π_{rt}`.
    pub fn core_algebra_for(&self, e: usize) -> Result<YDAlgebra> {
        Ok(self.core_algebra_variants_inner(e, false)?.remove(0))
    }

    /// The core algebra for every choice of coset representatives.
    pub fn core_algebra_variants(&self, e: usize) -> Result<Vec<YDAlgebra>> {
        self.core_algebra_variants_inner(e, true)
    }

    fn core_algebra_variants_inner(&self, e: usize, all: bool) -> Result<Vec<YDAlgebra>> {
        self.check_index(e)?;
        let report = self.compute_core(e)?;
        let (st, quotient) = self.stabilizers_full(e)?;
        let omegas = self.orbit_indices(&report.omega_basis);
        let grp = self.gl.group();
        let base: Vec<GroupElement> =
            quotient.group().elements().iter().map(|q| quotient.representative(q).clone()).collect();
        let mut choices = vec![base.clone()];
        if all {
            for (pos, r) in base.iter().enumerate() {
                choices = choices
                    .into_iter()
                    .flat_map(|c| {
                        quotient.kernel().iter().map(move |k| {
                            let mut c = c.clone();
                            c[pos] = grp.op(r, k);
                            c
                        })
                    })
                    .collect();
            }
        }
        choices.iter().map(|reps| self.core_algebra(&omegas, &st, &quotient, reps)).collect()
    }

    fn core_algebra(
        &self,
        omegas: &[usize],
        st: &Stabilizers,
        quotient: &QuotientGroup,
        reps: &[GroupElement],
    ) -> Result<YDAlgebra> {
        let grp = self.gl.group();
        let m = omegas.len();
        let restrict = |mat: &Matrix| -> Matrix {
            let mut r = Matrix::zeros(m, m);
            for (a, &i) in omegas.iter().enumerate() {
                for (b, &j) in omegas.iter().enumerate() {
                    r.set(a, b, mat.get(i, j).clone());
                }
            }
            r
        };
        let restrict_vec = |v: &AlgElement| -> Vec<Scalar> { omegas.iter().map(|&i| v.coeff(i).clone()).collect() };
        let mut mult = vec![vec![vec![]; m]; m];
        for (a, &i) in omegas.iter().enumerate() {
            for (b, &j) in omegas.iter().enumerate() {
                mult[a][b] = restrict_vec(&self.product(i, j));
            }
        }
        let mut coprod = vec![vec![vec![Scalar::zero(); m]; m]; m];
        for (c, &k) in omegas.iter().enumerate() {
            let d = self.gl.coprod_expand(&self.gl.basis(k))?;
            for (a, &i) in omegas.iter().enumerate() {
                for (b, &j) in omegas.iter().enumerate() {
                    coprod[c][a][b] = d.get(i, j).clone();
                }
            }
        }
        let qg = quotient.group();
        let mut action = Vec::new();
        let mut coaction = Vec::new();
        for (q, r) in qg.elements().into_iter().zip(reps) {
            action.push(GroupMatrix { g: q.clone(), matrix: restrict(self.gl.action_matrix(r)?) });
            let mut p = Matrix::zeros(self.len(), self.len());
            for t in &st.t_eta {
                p = &p + self.gl.projector(&grp.op(r, t))?;
            }
            coaction.push(GroupMatrix { g: q, matrix: restrict(&p) });
        }
        YDAlgebra::from_parts(YDParts {
            dim: m,
            labels: self.labels_of(omegas),
            group: qg.clone(),
            mult,
            unit: restrict_vec(self.gl.unit()),
            coprod,
            counit: omegas.iter().map(|&i| self.gl.counit_vector()[i].clone()).collect(),
            antipode: restrict(self.gl.antipode_matrix()),
            action,
            coaction,
        })
    }

    pub fn conjecture_scan(&self) -> Result<ConjectureScan> {
        let per_eta = (0..self.len()).into_par_iter().map(|e| self.compute_core(e)).collect::<Result<Vec<_>>>()?;
        Ok(ConjectureScan {
            all_cores_trivial: per_eta.iter().all(|r| r.trivial),
            all_checks_pass: per_eta.iter().all(CoreReport::all_checks_pass),
            per_eta,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_grouplikes() {
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let a = YDAlgebra::group_algebra(&z2, &FinAbGroup::trivial());
        let set = enumerate_grouplikes(&a).unwrap();
        assert!(set.is_basis);
        let mut found: Vec<AlgElement> = set.elements.clone();
        found.sort_by_key(|e| e.support());
        assert_eq!(found, vec![a.basis(0), a.basis(1)]);
        assert!(is_grouplike(&a, a.unit()).unwrap());
        let sum = &a.basis(0) + &a.basis(1);
        assert!(!is_grouplike(&a, &sum).unwrap());
    }

    #[test]
    fn charpoly_mod_small() {
        // [[2, 1], [0, 3]] has characteristic polynomial λ² − 5λ + 6
        let p = PRIMES[0];
        let c = charpoly_mod(&[vec![2, 1], vec![0, 3]], p);
        assert_eq!(c, vec![6, p - 5, 1]);
        assert_eq!(eval_mod(&c, 2, p), 0);
        assert_eq!(eval_mod(&c, 3, p), 0);
        assert_ne!(eval_mod(&c, 4, p), 0);
    }

    #[test]
    fn eighth_roots() {
        for p in PRIMES {
            let t = eighth_root(p);
            assert_eq!(cyclofield::pow_mod(t, 8, p), 1);
            assert_eq!(cyclofield::pow_mod(t, 4, p), p - 1);
        }
    }

    #[test]
    fn grid_has_no_duplicates() {
        let g = Grid::new(2);
        let set: std::collections::HashSet<&Scalar> = g.candidates.iter().collect();
        assert_eq!(set.len(), g.candidates.len());
    }

    #[test]
    fn exhausted_grid_is_reported() {
        // K[Z2] in the basis (3·e0, 3·e1): group-likes have coordinate 1/3
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let a = YDAlgebra::group_algebra(&z2, &FinAbGroup::trivial());
        let c = Matrix::from_int_rows(&[&[3, 0], &[0, 3]], 1);
        let b = a.change_basis(&c, vec!["u".into(), "v".into()]).unwrap();
        assert_eq!(enumerate_grouplikes_with(&b, 4), Err(Error::CandidateExhausted { bound: 4, dim: 2 }));
    }

    #[test]
    fn non_cocommutative_rejected() {
        let z2 = FinAbGroup::cyclic(2).unwrap();
        let mut p = YDAlgebra::group_algebra(&z2, &FinAbGroup::trivial()).to_parts();
        p.coprod[1][0][1] = Scalar::one();
        let a = YDAlgebra::from_parts(p).unwrap();
        assert_eq!(enumerate_grouplikes(&a), Err(Error::NotCocommutative));
    }
}
