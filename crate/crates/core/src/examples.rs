//! The two 8-dimensional Yetter-Drinfeld Hopf algebras over `K[Z₂ × Z₂]`,
//! built from generators and relations, together with their group-like
//! bases, product tables and representations.
//!
//! Both algebras have the monomial basis `xⁱyʲ` (`i < 4`, `j < 2`), stored at
//! index `i + 4j`, i.e. in the order `1, x, x², x³, y, xy, x²y, x³y`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{Bicharacter, FinAbGroup};
use crate::cyclofield::{Scalar, ZetaKind};
use crate::error::{Error, Result};
use crate::linalg::{rank_of, Matrix};
use crate::rmat::induce_coaction;
use crate::ydcore::{AlgElement, GroupMatrix, Tensor2, YDAlgebra, YDParts};

pub const MONOMIAL_LABELS: [&str; 8] = ["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"];
pub const GROUPLIKE_LABELS: [&str; 8] = ["omega1", "omega2", "omega3", "omega4", "eta1", "eta2", "eta3", "eta4"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Which {
    One,
    Two,
}

impl Which {
    pub fn number(self) -> u8 {
        match self {
            Which::One => 1,
            Which::Two => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExampleSpec {
    pub which: Which,
    pub zeta: ZetaKind,
}

impl ExampleSpec {
    pub fn new(which: Which, zeta: ZetaKind) -> Self {
        ExampleSpec { which, zeta }
    }

    /// All eight instantiations, example 1 first.
    pub fn all() -> Vec<ExampleSpec> {
        [Which::One, Which::Two]
            .iter()
            .flat_map(|&w| ZetaKind::ALL.iter().map(move |&z| ExampleSpec::new(w, z)))
            .collect()
    }

    fn zeta(&self) -> Scalar {
        self.zeta.embed()
    }

    /// `y²` as a polynomial in `x` (coefficients of `1, x, x², x³`).
    fn y_squared(&self) -> [Scalar; 4] {
        let z = self.zeta();
        let h = Scalar::rational(1, 2);
        match self.which {
            Which::One => [h.clone(), &h * &z, h.clone(), -(&h * &z)],
            Which::Two => [&h * &z, h.clone(), -(&h * &z), h],
        }
    }
}

impl fmt::Display for ExampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "example {} with ζ = {}", self.which.number(), self.zeta)
    }
}

/// The change from the monomial basis to the group-like basis
/// `ω₁, …, ω₄, η₁, …, η₄`; column `j` holds the monomial coordinates of the
/// `j`-th group-like element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisChange {
    matrix: Matrix,
    inverse: Matrix,
    labels: Vec<String>,
}

impl BasisChange {
    pub fn new(matrix: Matrix, labels: Vec<String>) -> Result<Self> {
        let inverse = matrix.inverse().ok_or_else(|| Error::BasisUnavailable("basis change is singular".into()))?;
        Ok(BasisChange { matrix, inverse, labels })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The `j`-th basis element in the original coordinates.
    pub fn element(&self, j: usize) -> AlgElement {
        AlgElement::new(self.matrix.column(j))
    }

    pub fn elements(&self) -> Vec<AlgElement> {
        (0..self.len()).map(|j| self.element(j)).collect()
    }

    /// Coordinates of `a` in the new basis.
    pub fn to_new(&self, a: &AlgElement) -> AlgElement {
        AlgElement::new(self.inverse.mul_vec(a.coeffs()))
    }

    pub fn from_new(&self, c: &AlgElement) -> AlgElement {
        AlgElement::new(self.matrix.mul_vec(c.coeffs()))
    }

    /// Determinant of the coefficient matrix of `2ω₂, 2ω₃` in `x, x³`.
    pub fn omega_block_det(&self) -> Scalar {
        let two = Scalar::from_int(2);
        let a = &two * self.matrix.get(1, 1);
        let b = &two * self.matrix.get(1, 2);
        let c = &two * self.matrix.get(3, 1);
        let d = &two * self.matrix.get(3, 2);
        &(&a * &d) - &(&b * &c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuiltExample {
    pub spec: ExampleSpec,
    pub algebra: YDAlgebra,
    pub basis_change: BasisChange,
}

impl BuiltExample {
    /// The same algebra written in the group-like basis.
    pub fn grouplike_algebra(&self) -> YDAlgebra {
        self.algebra
            .change_basis(self.basis_change.matrix(), self.basis_change.labels().to_vec())
            .expect("basis change is invertible")
    }
}

/// The bicharacter on `Z₂ × Z₂` with generator matrix `(ζ², −1; −1, 1)`.
pub fn example_theta(zeta: ZetaKind) -> Bicharacter {
    let z2 = zeta.embed().pow(2);
    let m = Matrix::from_rows(vec![vec![z2, -Scalar::one()], vec![-Scalar::one(), Scalar::one()]]).expect("2×2 matrix");
    Bicharacter::new(FinAbGroup::klein(), m).expect("±1 entries are valid on Z2 × Z2")
}

fn mono(i: usize, j: usize) -> usize {
    i % 4 + 4 * j
}

/// Structure constants of the normal-form product
/// `(xᵃyᵇ)(xᶜyᵈ) = x^{a + c·t^b} y^{b+d}` with `y² ↦` the quadratic relation,
/// where `t = 1` (commuting generators) or `t = 3` (`yx = x³y`).
fn multiplication_tensor(spec: &ExampleSpec) -> Vec<Vec<Vec<Scalar>>> {
    let t = match spec.which {
        Which::One => 1,
        Which::Two => 3,
    };
    let y2 = spec.y_squared();
    let mut mult = vec![vec![vec![Scalar::zero(); 8]; 8]; 8];
    for i in 0..8 {
        let (a, b) = (i % 4, i / 4);
        for j in 0..8 {
            let (c, d) = (j % 4, j / 4);
            let shift = a + c * if b == 1 { t } else { 1 };
            if b + d < 2 {
                mult[i][j][mono(shift, b + d)] = Scalar::one();
            } else {
                for (k, r) in y2.iter().enumerate() {
                    mult[i][j][mono(shift + k, 0)] += r;
                }
            }
        }
    }
    mult
}

fn product(mult: &[Vec<Vec<Scalar>>], a: &AlgElement, b: &AlgElement) -> AlgElement {
    let mut out = vec![Scalar::zero(); 8];
    for i in a.support() {
        for j in b.support() {
            let ab = a.coeff(i) * b.coeff(j);
            for (k, c) in mult[i][j].iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(&ab * c);
                }
            }
        }
    }
    AlgElement::new(out)
}

/// The algebra endomorphism with the given images of `x` and `y`, as a
/// matrix on the monomial basis.
fn endomorphism(mult: &[Vec<Vec<Scalar>>], x: &AlgElement, y: &AlgElement) -> Matrix {
    let one = AlgElement::basis(8, 0);
    let mut x_pows = vec![one];
    for k in 1..4 {
        x_pows.push(product(mult, &x_pows[k - 1], x));
    }
    let cols: Vec<Vec<Scalar>> = (0..8)
        .map(|k| {
            let img = if k < 4 { x_pows[k].clone() } else { product(mult, &x_pows[k - 4], y) };
            img.into_coeffs()
        })
        .collect();
    Matrix::from_columns(8, &cols).expect("8 columns of length 8")
}

fn monomial(i: usize, j: usize) -> AlgElement {
    AlgElement::basis(8, mono(i, j))
}

/// `ω₁ = 1`, `ω₂ = ½(1+ιζ²)x + ½(1−ιζ²)x³`, `ω₃ = ½(1−ιζ²)x + ½(1+ιζ²)x³`,
/// `ω₄ = x²`, `η₁ = y`, `η₂ = x³y`, `η₃ = x²y`, `η₄ = xy`.
fn grouplike_change(zeta: ZetaKind) -> BasisChange {
    let (p, m) = plus_minus(zeta);
    let mut cols = vec![vec![Scalar::zero(); 8]; 8];
    cols[0][0] = Scalar::one();
    cols[1][1] = p.clone();
    cols[1][3] = m.clone();
    cols[2][1] = m;
    cols[2][3] = p;
    cols[3][2] = Scalar::one();
    cols[4][mono(0, 1)] = Scalar::one();
    cols[5][mono(3, 1)] = Scalar::one();
    cols[6][mono(2, 1)] = Scalar::one();
    cols[7][mono(1, 1)] = Scalar::one();
    let matrix = Matrix::from_columns(8, &cols).expect("8 columns of length 8");
    BasisChange::new(matrix, GROUPLIKE_LABELS.iter().map(|s| s.to_string()).collect())
        .expect("group-like basis change is invertible")
}

/// `(½(1+ιζ²), ½(1−ιζ²))`.
pub fn plus_minus(zeta: ZetaKind) -> (Scalar, Scalar) {
    let h = Scalar::rational(1, 2);
    let iz2 = &Scalar::iota() * &zeta.embed().pow(2);
    (&h * &(&Scalar::one() + &iz2), &h * &(&Scalar::one() - &iz2))
}

/// The antipode on `η₁..η₄` in the group-like basis, as sign patterns:
/// `1 ↦ 1`, `-1 ↦ −1`, `2 ↦ ζ⁻¹`, `-2 ↦ −ζ⁻¹`, each halved.
fn antipode_pattern(which: Which) -> [[i8; 4]; 4] {
    match which {
        Which::One => [[1, 2, 1, -2], [2, 1, -2, 1], [1, -2, 1, 2], [-2, 1, 2, 1]],
        Which::Two => [[2, 1, -2, 1], [1, 2, 1, -2], [-2, 1, 2, 1], [1, -2, 1, 2]],
    }
}

fn grouplike_antipode(spec: &ExampleSpec) -> Matrix {
    let zinv = spec.zeta().inv().expect("ζ is a root of unity");
    let h = Scalar::rational(1, 2);
    let mut s = Matrix::identity(8);
    for (j, row) in antipode_pattern(spec.which).iter().enumerate() {
        for (i, &c) in row.iter().enumerate() {
            let v = match c {
                1 => h.clone(),
                -1 => -h.clone(),
                2 => &h * &zinv,
                _ => -(&h * &zinv),
            };
            // column 4 + j is S(η_{j+1})
            s.set(4 + i, 4 + j, v);
        }
    }
    s
}

pub fn build_example(spec: ExampleSpec) -> BuiltExample {
    let mult = multiplication_tensor(&spec);
    let x = monomial(1, 0);
    let x3 = monomial(3, 0);
    let phi = endomorphism(&mult, &x3, &monomial(3, 1));
    let phi_prime = endomorphism(&mult, &x, &monomial(2, 1));
    let group = FinAbGroup::klein();
    let action: Vec<Matrix> = group.elements().iter().map(|g| &phi.pow(g.e[0]) * &phi_prime.pow(g.e[1])).collect();
    let theta = example_theta(spec.zeta);
    let coaction = induce_coaction(&action, &theta).expect("θ is symmetric and nondegenerate");

    let labels: Vec<String> = MONOMIAL_LABELS.iter().map(|s| s.to_string()).collect();
    let tag = |ms: &[Matrix]| -> Vec<GroupMatrix> {
        group.elements().into_iter().zip(ms).map(|(g, m)| GroupMatrix { g, matrix: m.clone() }).collect()
    };
    let zero3 = vec![vec![vec![Scalar::zero(); 8]; 8]; 8];
    let mut parts = YDParts {
        dim: 8,
        labels,
        group: group.clone(),
        mult,
        unit: AlgElement::basis(8, 0).into_coeffs(),
        coprod: zero3,
        counit: vec![Scalar::one(); 8],
        antipode: Matrix::identity(8),
        action: tag(&action),
        coaction: tag(&coaction),
    };
    // the braided product only needs μ, φ and π
    let scaffold = YDAlgebra::from_parts(parts.clone()).expect("well-formed scaffold");

    let h = Scalar::rational(1, 2);
    let mut dx = Tensor2::zero(8);
    dx.add_term(1, 1, &h);
    dx.add_term(1, 3, &h);
    dx.add_term(3, 1, &h);
    dx.add_term(3, 3, &-h.clone());
    let dy = Tensor2::basis(8, 4, 4);
    let mut x_pows = vec![Tensor2::basis(8, 0, 0)];
    for k in 1..4 {
        x_pows.push(scaffold.braided_tensor_multiply(&x_pows[k - 1], &dx).expect("dim 8"));
    }
    let mut deltas = x_pows.clone();
    for xp in &x_pows {
        deltas.push(scaffold.braided_tensor_multiply(xp, &dy).expect("dim 8"));
    }
    parts.coprod =
        deltas.iter().map(|d| (0..8).map(|i| (0..8).map(|j| d.get(i, j).clone()).collect()).collect()).collect();

    let change = grouplike_change(spec.zeta);
    parts.antipode = &(change.matrix() * &grouplike_antipode(&spec)) * change.inverse();
    let algebra = YDAlgebra::from_parts(parts).expect("well-formed example");
    BuiltExample { spec, algebra, basis_change: change }
}

/// `y⁴` in the monomial basis.
pub fn y_fourth_power(built: &BuiltExample) -> AlgElement {
    let a = &built.algebra;
    let y = a.basis(4);
    let y2 = a.multiply(&y, &y).expect("dim 8");
    a.multiply(&y2, &y2).expect("dim 8")
}

/// Products of group-like basis elements, expressed in the group-like
/// basis. Entry `[i][j]` of each table is (row factor)·(column factor).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTables {
    pub labels: Vec<String>,
    pub omega_omega: Vec<Vec<AlgElement>>,
    pub omega_eta: Vec<Vec<AlgElement>>,
    pub eta_omega: Vec<Vec<AlgElement>>,
    pub eta_eta: Vec<Vec<AlgElement>>,
}

pub fn grouplike_basis_tables(algebra: &YDAlgebra, change: &BasisChange) -> Result<ProductTables> {
    let gl = algebra.change_basis(change.matrix(), change.labels().to_vec())?;
    let table = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| -> Result<Vec<Vec<AlgElement>>> {
        rows.map(|i| cols.clone().map(|j| gl.multiply(&gl.basis(i), &gl.basis(j))).collect()).collect()
    };
    Ok(ProductTables {
        labels: change.labels().to_vec(),
        omega_omega: table(0..4, 0..4)?,
        omega_eta: table(0..4, 4..8)?,
        eta_omega: table(4..8, 0..4)?,
        eta_eta: table(4..8, 4..8)?,
    })
}

/// `omega2 ↦ ω2`, `eta3 ↦ η3`; other labels unchanged.
pub fn pretty_label(label: &str) -> String {
    if let Some(rest) = label.strip_prefix("omega") {
        format!("ω{rest}")
    } else if let Some(rest) = label.strip_prefix("eta") {
        format!("η{rest}")
    } else {
        label.to_string()
    }
}

impl ProductTables {
    pub fn to_markdown(&self) -> String {
        let pretty: Vec<String> = self.labels.iter().map(|l| pretty_label(l)).collect();
        let mut out = String::new();
        let sections = [
            ("ω·ω", &self.omega_omega, 0, 0),
            ("ω·η", &self.omega_eta, 0, 4),
            ("η·ω", &self.eta_omega, 4, 0),
            ("η·η", &self.eta_eta, 4, 4),
        ];
        for (title, table, r0, c0) in sections {
            out.push_str(&format!("### {title}\n\n"));
            out.push_str("| |");
            for j in 0..4 {
                out.push_str(&format!(" {} |", pretty[c0 + j]));
            }
            out.push_str("\n|---|---|---|---|---|\n");
            for (i, row) in table.iter().enumerate() {
                out.push_str(&format!("| {} |", pretty[r0 + i]));
                for e in row {
                    out.push_str(&format!(" {} |", crate::ydcore::format_combination(e.coeffs(), &pretty)));
                }
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }
}

/// An algebra map `A → K`, determined by its values on `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraCharacter {
    pub name: String,
    pub x: Scalar,
    pub y: Scalar,
}

impl AlgebraCharacter {
    /// Values on the monomial basis.
    pub fn values(&self) -> Vec<Scalar> {
        (0..8).map(|k| &self.x.pow((k % 4) as u32) * &self.y.pow((k / 4) as u32)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoDimRep {
    pub x: Matrix,
    pub y: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleCharacters {
    pub characters: Vec<AlgebraCharacter>,
    pub two_dim: Option<TwoDimRep>,
}

fn chr(name: &str, x: Scalar, y: Scalar) -> AlgebraCharacter {
    AlgebraCharacter { name: name.to_string(), x, y }
}

pub fn characters_of_example(spec: ExampleSpec) -> ExampleCharacters {
    let one = Scalar::one();
    let i = Scalar::iota();
    let xi = Scalar::xi();
    let z = spec.zeta();
    let eps = |ys: [Scalar; 4]| -> Vec<AlgebraCharacter> {
        let xs = [one.clone(), -one.clone(), -one.clone(), one.clone()];
        xs.into_iter().zip(ys).enumerate().map(|(k, (x, y))| chr(&format!("epsilon{}", k + 1), x, y)).collect()
    };
    match spec.which {
        Which::One => {
            let mut chars = eps([one.clone(), one.clone(), -one.clone(), -one.clone()]);
            let (xs, ys): ([Scalar; 4], [Scalar; 4]) = match spec.zeta {
                ZetaKind::PlusI | ZetaKind::MinusI => {
                    ([z.clone(), -z.clone(), z.clone(), -z.clone()], [z.clone(), one.clone(), -z.clone(), -one.clone()])
                }
                ZetaKind::MinusOne => {
                    ([-i.clone(), i.clone(), -i.clone(), i.clone()], [xi.clone(), &i * &xi, -xi.clone(), -(&i * &xi)])
                }
                ZetaKind::PlusOne => {
                    ([-i.clone(), i.clone(), -i.clone(), i.clone()], [-(&i * &xi), xi.clone(), &i * &xi, -xi.clone()])
                }
            };
            for (k, (x, y)) in xs.into_iter().zip(ys).enumerate() {
                chars.push(chr(&format!("rho{}", k + 1), x, y));
            }
            ExampleCharacters { characters: chars, two_dim: None }
        }
        Which::Two => {
            let chars = eps([one.clone(), i.clone(), -i.clone(), -one.clone()]);
            let x = Matrix::from_rows(vec![vec![i.clone(), Scalar::zero()], vec![Scalar::zero(), -i]]).expect("2×2");
            let y = Matrix::from_rows(vec![vec![Scalar::zero(), z], vec![one, Scalar::zero()]]).expect("2×2");
            ExampleCharacters { characters: chars, two_dim: Some(TwoDimRep { x, y }) }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationReport {
    /// Every character and the 2-dimensional representation satisfy the
    /// defining relations.
    pub relations_hold: bool,
    /// Every character is multiplicative on the structure constants.
    pub multiplicative: bool,
    pub distinct_characters: usize,
    /// Rank of the map from `A` to the product of all representations.
    pub combined_rank: usize,
    /// Dimension of the image of `A` in the 2-dimensional representation.
    pub two_dim_image: Option<usize>,
}

impl RepresentationReport {
    /// `A ≅ K⁸` or `A ≅ K⁴ ⊕ M(2×2, K)` is certified.
    pub fn certifies_decomposition(&self) -> bool {
        let image_ok = self.two_dim_image.is_none_or(|d| d == 4);
        self.relations_hold && self.multiplicative && self.combined_rank == 8 && image_ok
    }
}

/// The images of the monomials `xⁱyʲ` under `x ↦ X`, `y ↦ Y`.
pub fn monomial_images(x: &Matrix, y: &Matrix) -> Vec<Matrix> {
    let n = x.rows();
    let mut out = Vec::with_capacity(8);
    for j in 0..2u32 {
        for i in 0..4u32 {
            let yj = if j == 0 { Matrix::identity(n) } else { y.clone() };
            out.push(&x.pow(i) * &yj);
        }
    }
    out
}

/// Checks `X⁴ = 1`, `XY = YX^t`, and `Y² = r(X)` for the example's relations.
fn relations_hold(spec: &ExampleSpec, x: &Matrix, y: &Matrix) -> bool {
    let n = x.rows();
    let t = match spec.which {
        Which::One => 1,
        Which::Two => 3,
    };
    let r = spec.y_squared();
    let mut rhs = Matrix::zeros(n, n);
    for (k, c) in r.iter().enumerate() {
        rhs = &rhs + &x.pow(k as u32).scale(c);
    }
    x.pow(4).is_identity() && (x * y) == (y * &x.pow(t)) && (y * y) == rhs
}

pub fn check_representations(built: &BuiltExample, chars: &ExampleCharacters) -> RepresentationReport {
    let spec = &built.spec;
    let a = &built.algebra;
    let as_1x1 = |s: &Scalar| Matrix::from_rows(vec![vec![s.clone()]]).expect("1×1");
    let mut relations = chars.characters.iter().all(|c| relations_hold(spec, &as_1x1(&c.x), &as_1x1(&c.y)));
    let multiplicative = chars.characters.iter().all(|c| {
        let v = c.values();
        let f = |e: &AlgElement| -> Scalar { e.coeffs().iter().zip(&v).map(|(p, q)| p * q).sum() };
        f(a.unit()).is_one()
            && (0..8).all(|i| (0..8).all(|j| f(&a.multiply(&a.basis(i), &a.basis(j)).expect("dim 8")) == &v[i] * &v[j]))
    });
    let mut rows: Vec<Vec<Scalar>> = chars.characters.iter().map(AlgebraCharacter::values).collect();
    let mut two_dim_image = None;
    if let Some(rep) = &chars.two_dim {
        relations &= relations_hold(spec, &rep.x, &rep.y);
        let imgs = monomial_images(&rep.x, &rep.y);
        let flat: Vec<Vec<Scalar>> = imgs.iter().map(|m| m.to_rows().concat()).collect();
        two_dim_image = Some(rank_of(&flat));
        for r in 0..2 {
            for c in 0..2 {
                rows.push(imgs.iter().map(|m| m.get(r, c).clone()).collect());
            }
        }
    }
    let distinct = {
        let mut seen: Vec<(Scalar, Scalar)> = Vec::new();
        for c in &chars.characters {
            if !seen.contains(&(c.x.clone(), c.y.clone())) {
                seen.push((c.x.clone(), c.y.clone()));
            }
        }
        seen.len()
    };
    RepresentationReport {
        relations_hold: relations,
        multiplicative,
        distinct_characters: distinct,
        combined_rank: rank_of(&rows),
        two_dim_image,
    }
}

/// The faithful 8-dimensional block representation of example 2.
pub fn matrix_rep_example2(zeta: ZetaKind) -> TwoBlockRep {
    let z = zeta.embed();
    let x1 = Matrix::from_int_rows(&[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]], 1);
    let y2 = Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0]], 1);
    let one = Scalar::one();
    let nz = -z.clone();
    let y1 = Matrix::from_rows(vec![
        vec![z.clone(), one.clone(), nz.clone(), one.clone()],
        vec![one.clone(), nz.clone(), one.clone(), z.clone()],
        vec![nz, one.clone(), z.clone(), one.clone()],
        vec![one.clone(), z, one.clone(), -zeta.embed()],
    ])
    .expect("4×4")
    .scale(&Scalar::rational(1, 2));
    let zero = Matrix::zeros(4, 4);
    let x = block(&x1, &zero, &zero, &x1);
    let y = block(&zero, &y1, &y2, &zero);
    TwoBlockRep { x, y, x1: x1.clone(), x2: x1, y1, y2 }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoBlockRep {
    pub x: Matrix,
    pub y: Matrix,
    pub x1: Matrix,
    pub x2: Matrix,
    pub y1: Matrix,
    pub y2: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRepReport {
    pub x4_identity: bool,
    pub xy_yx3: bool,
    pub y2_relation: bool,
    pub monomial_rank: usize,
}

impl MatrixRepReport {
    pub fn all_pass(&self) -> bool {
        self.x4_identity && self.xy_yx3 && self.y2_relation && self.monomial_rank == 8
    }
}

pub fn check_matrix_rep(zeta: ZetaKind, rep: &TwoBlockRep) -> MatrixRepReport {
    let spec = ExampleSpec::new(Which::Two, zeta);
    let (x, y) = (&rep.x, &rep.y);
    let r = spec.y_squared();
    let mut rhs = Matrix::zeros(8, 8);
    for (k, c) in r.iter().enumerate() {
        rhs = &rhs + &x.pow(k as u32).scale(c);
    }
    let flat: Vec<Vec<Scalar>> = monomial_images(x, y).iter().map(|m| m.to_rows().concat()).collect();
    MatrixRepReport {
        x4_identity: x.pow(4).is_identity(),
        xy_yx3: (x * y) == (y * &x.pow(3)),
        y2_relation: (y * y) == rhs,
        monomial_rank: rank_of(&flat),
    }
}

fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    let n = a.rows();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, a.get(i, j).clone());
            m.set(i, n + j, b.get(i, j).clone());
            m.set(n + i, j, c.get(i, j).clone());
            m.set(n + i, n + j, d.get(i, j).clone());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_respects_relations() {
        for spec in ExampleSpec::all() {
            let b = build_example(spec);
            let a = &b.algebra;
            let x = a.basis(1);
            let y = a.basis(4);
            let mut x4 = a.unit().clone();
            for _ in 0..4 {
                x4 = a.multiply(&x4, &x).unwrap();
            }
            assert_eq!(&x4, a.unit());
            let xy = a.multiply(&x, &y).unwrap();
            let yx = a.multiply(&y, &x).unwrap();
            match spec.which {
                Which::One => assert_eq!(xy, yx),
                Which::Two => {
                    let x3 = a.basis(3);
                    assert_eq!(xy, a.multiply(&y, &x3).unwrap());
                }
            }
        }
    }

    #[test]
    fn sigma_of_x_and_y() {
        let b = build_example(ExampleSpec::new(Which::One, ZetaKind::PlusI));
        let a = &b.algebra;
        let s = a.quasisymmetry(&a.basis(1), &a.basis(4)).unwrap();
        // ½(1 + x²)y ⊗ x + ½(1 − x²)y ⊗ x³
        let h = Scalar::rational(1, 2);
        let mut expect = Tensor2::zero(8);
        expect.add_term(4, 1, &h);
        expect.add_term(6, 1, &h);
        expect.add_term(4, 3, &h);
        expect.add_term(6, 3, &-h.clone());
        assert_eq!(s, expect);
    }

    #[test]
    fn omega_block_determinant() {
        for z in ZetaKind::ALL {
            let b = build_example(ExampleSpec::new(Which::One, z));
            let expect = &Scalar::from_int(4) * &(&Scalar::iota() * &z.embed().pow(2));
            assert_eq!(b.basis_change.omega_block_det(), expect);
        }
    }

    #[test]
    fn delta_of_x_cubed() {
        let b = build_example(ExampleSpec::new(Which::One, ZetaKind::MinusI));
        let d = b.algebra.coprod_expand(&b.algebra.basis(3)).unwrap();
        let h = Scalar::rational(1, 2);
        let mut expect = Tensor2::zero(8);
        expect.add_term(3, 3, &h);
        expect.add_term(3, 1, &h);
        expect.add_term(1, 3, &h);
        expect.add_term(1, 1, &-h.clone());
        assert_eq!(d, expect);
    }

    #[test]
    fn pretty_labels() {
        assert_eq!(pretty_label("omega2"), "ω2");
        assert_eq!(pretty_label("eta4"), "η4");
        assert_eq!(pretty_label("x^2y"), "x^2y");
    }
}
