//! Finite abelian groups `Z_{n₁} × … × Z_{n_r}`, their character groups,
//! annihilators in both directions, quotients and bicharacters.
//!
//! Elements are exponent tuples. The canonical enumeration order is mixed
//! radix with the *first* factor varying fastest, so for `Z₂ × Z₂` the
//! elements come out as `(0,0), (1,0), (0,1), (1,1)`. Characters are
//! enumerated in the same order, `χ_k(gᵢ) = ω_{nᵢ}^{kᵢ}` with
//! `ω_n = ξ^{8/n}`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclofield::Scalar;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub e: Vec<u32>,
}

impl GroupElement {
    pub fn new(e: Vec<u32>) -> Self {
        GroupElement { e }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.e.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ω_n = ξ^{8/n}`, a primitive `n`-th root of unity, for `n | 8`.
pub fn root_of_unity(n: u32) -> Result<Scalar> {
    if n == 0 || 8 % n != 0 {
        return Err(Error::UnsupportedExponent(n));
    }
    Ok(Scalar::xi_pow(i64::from(8 / n)))
}

impl FinAbGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidFactor);
        }
        Ok(FinAbGroup { factors })
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        FinAbGroup::new(vec![n])
    }

    /// `Z₂ × Z₂`, the group of both constructed examples.
    pub fn klein() -> Self {
        FinAbGroup { factors: vec![2, 2] }
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1, |acc, &n| num_integer::lcm(acc, n))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { e: vec![0; self.rank()] }
    }

    pub fn element(&self, mut index: usize) -> GroupElement {
        let mut e = Vec::with_capacity(self.rank());
        for &n in &self.factors {
            e.push((index % n as usize) as u32);
            index /= n as usize;
        }
        GroupElement { e }
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    pub fn index_of(&self, g: &GroupElement) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (&x, &n) in g.e.iter().zip(&self.factors) {
            idx += x as usize * stride;
            stride *= n as usize;
        }
        idx
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.e.len() == self.rank() && g.e.iter().zip(&self.factors).all(|(&x, &n)| x < n)
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ForeignElement(g.to_string()))
        }
    }

    /// The canonical generators `(0,…,1,…,0)`.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|i| {
                let mut e = vec![0; self.rank()];
                if self.factors[i] > 1 {
                    e[i] = 1;
                }
                GroupElement { e }
            })
            .collect()
    }

    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement { e: a.e.iter().zip(&b.e).zip(&self.factors).map(|((&x, &y), &n)| (x + y) % n).collect() }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        GroupElement { e: a.e.iter().zip(&self.factors).map(|(&x, &n)| (n - x) % n).collect() }
    }

    pub fn pow(&self, a: &GroupElement, k: u32) -> GroupElement {
        GroupElement {
            e: a.e.iter().zip(&self.factors).map(|(&x, &n)| ((x as u64 * k as u64) % n as u64) as u32).collect(),
        }
    }

    pub fn order_of(&self, a: &GroupElement) -> u32 {
        a.e.iter().zip(&self.factors).map(|(&x, &n)| n / num_integer::gcd(x, n)).fold(1, num_integer::lcm)
    }

    fn require_exponent_divides_8(&self) -> Result<()> {
        match self.factors.iter().find(|&&n| 8 % n != 0) {
            Some(&n) => Err(Error::UnsupportedExponent(n)),
            None => Ok(()),
        }
    }

    /// The character `χ_k` with `χ_k(genᵢ) = ω_{nᵢ}^{kᵢ}`.
    pub fn character(&self, k: &GroupElement) -> Result<Character> {
        self.require_exponent_divides_8()?;
        self.check(k)?;
        let values =
            k.e.iter().zip(&self.factors).map(|(&ki, &n)| Ok(root_of_unity(n)?.pow(ki))).collect::<Result<Vec<_>>>()?;
        Ok(Character { values })
    }

    pub fn trivial_character(&self) -> Character {
        Character { values: vec![Scalar::one(); self.rank()] }
    }

    /// All `|G|` characters in canonical order.
    pub fn dual_group(&self) -> Result<Vec<Character>> {
        self.elements().iter().map(|k| self.character(k)).collect()
    }

    /// Exponent tuple `k` with `χ = χ_k`, if `χ` is a character of this group.
    pub fn character_exponents(&self, chi: &Character) -> Option<GroupElement> {
        if chi.values.len() != self.rank() {
            return None;
        }
        let mut e = Vec::with_capacity(self.rank());
        for (v, &n) in chi.values.iter().zip(&self.factors) {
            let w = root_of_unity(n).ok()?;
            let k = (0..n).find(|&k| &w.pow(k) == v)?;
            e.push(k);
        }
        Some(GroupElement { e })
    }

    pub fn character_index(&self, chi: &Character) -> Option<usize> {
        self.character_exponents(chi).map(|k| self.index_of(&k))
    }

    /// Whether `χ_k(g) = 1`, by exact integer arithmetic on exponents:
    /// `χ_k(g) = exp(2πi Σ kᵢ gᵢ / nᵢ)`.
    fn pairing_trivial(&self, k: &GroupElement, g: &GroupElement) -> bool {
        let l = self.exponent() as u64;
        let s: u64 =
            k.e.iter()
                .zip(&g.e)
                .zip(&self.factors)
                .map(|((&ki, &gi), &n)| ki as u64 * gi as u64 * (l / n as u64))
                .sum();
        s.is_multiple_of(l)
    }

    fn closure_of(&self, seeds: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen: HashSet<GroupElement> = HashSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for s in seeds {
                let y = self.op(&x, s);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<GroupElement> = seen.into_iter().collect();
        out.sort_by_key(|g| self.index_of(g));
        out
    }

    /// The subgroup generated by `s`, in canonical order.
    pub fn generated_subgroup(&self, s: &[GroupElement]) -> Result<Vec<GroupElement>> {
        for g in s {
            self.check(g)?;
        }
        Ok(self.closure_of(s))
    }

    pub fn is_subgroup(&self, s: &[GroupElement]) -> bool {
        let set: HashSet<&GroupElement> = s.iter().collect();
        !s.is_empty()
            && s.iter().all(|g| self.contains(g))
            && s.iter().all(|a| s.iter().all(|b| set.contains(&self.op(a, &self.inverse(b)))))
    }

    /// The subgroup of `Ĝ` generated by the given characters.
    pub fn generated_character_subgroup(&self, s: &[Character]) -> Result<Vec<Character>> {
        let ks = s.iter().map(|c| self.exponents_or_err(c)).collect::<Result<Vec<_>>>()?;
        self.closure_of(&ks).iter().map(|k| self.character(k)).collect()
    }

    fn exponents_or_err(&self, c: &Character) -> Result<GroupElement> {
        self.character_exponents(c).ok_or_else(|| Error::ForeignElement(format!("character {c}")))
    }

    /// `S^⊥ ⊂ Ĝ`: the characters taking the value 1 on every element of `S`.
    pub fn perp_of_elements(&self, s: &[GroupElement]) -> Result<Vec<Character>> {
        self.require_exponent_divides_8()?;
        for g in s {
            self.check(g)?;
        }
        self.elements()
            .into_iter()
            .filter(|k| s.iter().all(|g| self.pairing_trivial(k, g)))
            .map(|k| self.character(&k))
            .collect()
    }

    /// `S^⊥ ⊂ G`: the elements on which every character of `S` is 1.
    pub fn perp_of_characters(&self, s: &[Character]) -> Result<Vec<GroupElement>> {
        let ks = s.iter().map(|c| self.exponents_or_err(c)).collect::<Result<Vec<_>>>()?;
        Ok(self.elements().into_iter().filter(|g| ks.iter().all(|k| self.pairing_trivial(k, g))).collect())
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join(" × "))
    }
}

/// A group homomorphism `G → K^×`, stored by its values on the canonical
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    /// Validates that each generator value is an `nᵢ`-th root of unity.
    pub fn new(group: &FinAbGroup, values: Vec<Scalar>) -> Result<Self> {
        let c = Character { values };
        group.exponents_or_err(&c)?;
        Ok(c)
    }

    pub fn eval(&self, g: &GroupElement) -> Scalar {
        let mut acc = Scalar::one();
        for (v, &x) in self.values.iter().zip(&g.e) {
            if x > 0 {
                acc = &acc * &v.pow(x);
            }
        }
        acc
    }

    pub fn mul(&self, other: &Character) -> Character {
        Character { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Scalar::is_one)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "χ[{}]", parts.join(", "))
    }
}

/// A bicharacter `θ: G × G → K^×`, stored as the matrix of its values on
/// pairs of canonical generators; bimultiplicativity then defines it on all
/// of `G × G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bicharacter {
    group: FinAbGroup,
    matrix: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicharacterReport {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub orthogonality: bool,
}

impl Bicharacter {
    /// Checks that `θ(genᵢ, genⱼ)` is both an `nᵢ`-th and an `nⱼ`-th root of
    /// unity, which is exactly what makes the bimultiplicative extension
    /// well defined.
    pub fn new(group: FinAbGroup, matrix: Matrix) -> Result<Self> {
        let r = group.rank();
        if matrix.rows() != r || matrix.cols() != r {
            return Err(Error::DimensionMismatch { expected: r, found: matrix.rows() });
        }
        for i in 0..r {
            for j in 0..r {
                let v = matrix.get(i, j);
                let ni = group.factors[i];
                let nj = group.factors[j];
                if !v.pow(ni).is_one() || !v.pow(nj).is_one() {
                    return Err(Error::InvalidBicharacter(format!(
                        "θ(gen{i}, gen{j}) = {v} is not a common {ni}-th/{nj}-th root of unity"
                    )));
                }
            }
        }
        Ok(Bicharacter { group, matrix })
    }

    /// The constant bicharacter `θ ≡ 1`.
    pub fn trivial(group: FinAbGroup) -> Self {
        let r = group.rank();
        let mut m = Matrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                m.set(i, j, Scalar::one());
            }
        }
        Bicharacter { group, matrix: m }
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        let mut acc = Scalar::one();
        for (i, &gi) in g.e.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &hj) in h.e.iter().enumerate() {
                if hj == 0 {
                    continue;
                }
                acc = &acc * &self.matrix.get(i, j).pow(gi * hj);
            }
        }
        acc
    }

    /// `|G| × |G|` table of all values, indexed canonically.
    pub fn table(&self) -> Matrix {
        let els = self.group.elements();
        let mut t = Matrix::zeros(els.len(), els.len());
        for (a, g) in els.iter().enumerate() {
            for (b, h) in els.iter().enumerate() {
                t.set(a, b, self.eval(g, h));
            }
        }
        t
    }

    /// `γ = θ(g, ·)`.
    pub fn left_character(&self, g: &GroupElement) -> Character {
        let values = self.group.generators().iter().map(|h| self.eval(g, h)).collect();
        Character { values }
    }

    /// `θ(·, h)`.
    pub fn right_character(&self, h: &GroupElement) -> Character {
        let values = self.group.generators().iter().map(|g| self.eval(g, h)).collect();
        Character { values }
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    /// Only the unit pairs trivially with everything.
    pub fn is_nondegenerate(&self) -> bool {
        let t = self.table();
        (1..t.rows()).all(|a| (0..t.cols()).any(|b| !t.get(a, b).is_one()))
    }

    /// `Σ_g θ(g,g') = |G| δ_{g',1}` and `Σ_{g'} θ(g,g') = |G| δ_{g,1}`.
    pub fn orthogonality(&self) -> bool {
        let t = self.table();
        let n = t.rows();
        let order = Scalar::from_int(n as i64);
        let expect = |i: usize| if i == 0 { order.clone() } else { Scalar::zero() };
        let cols = (0..n).all(|b| (0..n).map(|a| t.get(a, b).clone()).sum::<Scalar>() == expect(b));
        let rows = (0..n).all(|a| (0..n).map(|b| t.get(a, b).clone()).sum::<Scalar>() == expect(a));
        cols && rows
    }
}

pub fn bicharacter_checks(theta: &Bicharacter) -> BicharacterReport {
    BicharacterReport {
        symmetric: theta.is_symmetric(),
        nondegenerate: theta.is_nondegenerate(),
        orthogonality: theta.orthogonality(),
    }
}

/// A quotient `S/N` of a subgroup `S` of an ambient group by a subgroup
/// `N ⊂ S`, identified with a product of cyclic groups through an explicit
/// isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    ambient: FinAbGroup,
    group: FinAbGroup,
    numerator: Vec<GroupElement>,
    kernel: Vec<GroupElement>,
    /// Coset representative in the ambient group, indexed canonically by
    /// elements of `group`.
    representatives: Vec<GroupElement>,
}

impl QuotientGroup {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn kernel(&self) -> &[GroupElement] {
        &self.kernel
    }

    pub fn numerator(&self) -> &[GroupElement] {
        &self.numerator
    }

    pub fn representative(&self, q: &GroupElement) -> &GroupElement {
        &self.representatives[self.group.index_of(q)]
    }

    pub fn representatives(&self) -> &[GroupElement] {
        &self.representatives
    }

    /// The projection `S → S/N`; `None` for elements outside `S`.
    pub fn project(&self, g: &GroupElement) -> Option<GroupElement> {
        if !self.numerator.contains(g) {
            return None;
        }
        let amb = &self.ambient;
        self.representatives
            .iter()
            .position(|r| {
                let d = amb.op(g, &amb.inverse(r));
                self.kernel.contains(&d)
            })
            .map(|i| self.group.element(i))
    }
}

/// `G/H` for a subgroup `H ⊂ G`.
pub fn quotient_of(g: &FinAbGroup, h: &[GroupElement]) -> Result<QuotientGroup> {
    quotient_group(g, &g.elements(), h)
}

/// `S/N` for subgroups `N ⊂ S ⊂ G`.
pub fn quotient_group(
    ambient: &FinAbGroup,
    numerator: &[GroupElement],
    kernel: &[GroupElement],
) -> Result<QuotientGroup> {
    if !ambient.is_subgroup(numerator) {
        return Err(Error::NotASubgroup("numerator".into()));
    }
    if !ambient.is_subgroup(kernel) || kernel.iter().any(|k| !numerator.contains(k)) {
        return Err(Error::NotASubgroup("kernel is not a subgroup of the numerator".into()));
    }
    let mut num: Vec<GroupElement> = numerator.to_vec();
    num.sort_by_key(|g| ambient.index_of(g));
    num.dedup();
    let mut ker: Vec<GroupElement> = kernel.to_vec();
    ker.sort_by_key(|g| ambient.index_of(g));
    ker.dedup();

    // Cosets, each represented by its first element in canonical order.
    let mut coset_of: HashMap<GroupElement, usize> = HashMap::new();
    let mut reps: Vec<GroupElement> = Vec::new();
    for g in &num {
        if coset_of.contains_key(g) {
            continue;
        }
        let id = reps.len();
        reps.push(g.clone());
        for k in &ker {
            coset_of.insert(ambient.op(g, k), id);
        }
    }
    let m = reps.len();
    let qop = |a: usize, b: usize| coset_of[&ambient.op(&reps[a], &reps[b])];
    let qorder = |a: usize| {
        let mut x = a;
        let mut k = 1u32;
        while x != 0 {
            x = qop(x, a);
            k += 1;
        }
        k
    };
    // coset 0 is the kernel itself since the identity comes first
    debug_assert_eq!(coset_of[&ambient.identity()], 0);

    let mut profile: Vec<u32> = (0..m).map(qorder).collect();
    profile.sort_unstable();

    let factors = invariant_factor_chains(m as u32)
        .into_iter()
        .find(|f| {
            let cand = FinAbGroup { factors: f.clone() };
            let mut p: Vec<u32> = cand.elements().iter().map(|x| cand.order_of(x)).collect();
            p.sort_unstable();
            p == profile
        })
        .ok_or_else(|| Error::NotASubgroup("quotient is not abelian of a known type".into()))?;
    let group = FinAbGroup { factors };

    // Images of the canonical generators.
    let mut gens: Vec<usize> = vec![0; group.rank()];
    let mut span: Vec<usize> = vec![0];
    if !assign_generators(&group.factors, group.rank(), &mut gens, &mut span, m, &qop, &qorder) {
        return Err(Error::NotASubgroup("could not find quotient generators".into()));
    }
    let representatives = group
        .elements()
        .iter()
        .map(|x| {
            let mut c = 0usize;
            for (i, &xi) in x.e.iter().enumerate() {
                for _ in 0..xi {
                    c = qop(c, gens[i]);
                }
            }
            reps[c].clone()
        })
        .collect();
    Ok(QuotientGroup { ambient: ambient.clone(), group, numerator: num, kernel: ker, representatives })
}

fn assign_generators(
    factors: &[u32],
    remaining: usize,
    gens: &mut [usize],
    span: &mut Vec<usize>,
    m: usize,
    qop: &dyn Fn(usize, usize) -> usize,
    qorder: &dyn Fn(usize) -> u32,
) -> bool {
    if remaining == 0 {
        return span.len() == m;
    }
    let pos = factors.len() - remaining;
    let d = factors[pos];
    for c in 0..m {
        if qorder(c) != d {
            continue;
        }
        let mut next: HashSet<usize> = HashSet::new();
        for &s in span.iter() {
            let mut x = s;
            for _ in 0..d {
                next.insert(x);
                x = qop(x, c);
            }
        }
        if next.len() != span.len() * d as usize {
            continue;
        }
        let saved = std::mem::replace(span, next.into_iter().collect());
        gens[pos] = c;
        if assign_generators(factors, remaining - 1, gens, span, m, qop, qorder) {
            return true;
        }
        *span = saved;
    }
    false
}

/// All chains `d₁ | d₂ | … | d_r` with `dᵢ > 1` and product `m`.
fn invariant_factor_chains(m: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, last: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 1 {
            out.push(cur.clone());
            return;
        }
        for d in 2..=rem {
            if rem.is_multiple_of(d) && d % last == 0 {
                // every later factor is a multiple of d, so d^k must divide rem
                cur.push(d);
                go(rem / d, d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, 1, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(e: &[u32]) -> GroupElement {
        GroupElement::new(e.to_vec())
    }

    #[test]
    fn klein_enumeration_order() {
        let k = FinAbGroup::klein();
        assert_eq!(k.elements(), vec![g(&[0, 0]), g(&[1, 0]), g(&[0, 1]), g(&[1, 1])]);
        for (i, x) in k.elements().iter().enumerate() {
            assert_eq!(k.index_of(x), i);
        }
    }

    #[test]
    fn dual_of_klein_is_plus_minus_one() {
        let chars = FinAbGroup::klein().dual_group().unwrap();
        assert_eq!(chars.len(), 4);
        let one = Scalar::one();
        for c in &chars {
            for v in &c.values {
                assert!(v == &one || v == &-one.clone());
            }
        }
        let set: HashSet<_> = chars.iter().collect();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn dual_of_trivial_and_z4() {
        let t = FinAbGroup::trivial();
        let d = t.dual_group().unwrap();
        assert_eq!(d.len(), 1);
        assert!(d[0].is_trivial());

        let z4 = FinAbGroup::cyclic(4).unwrap();
        let vals: Vec<Scalar> = z4.dual_group().unwrap().iter().map(|c| c.eval(&g(&[1]))).collect();
        let i = Scalar::iota();
        assert_eq!(vals, vec![Scalar::one(), i.clone(), -Scalar::one(), -i]);
    }

    #[test]
    fn unsupported_exponent() {
        let z3 = FinAbGroup::cyclic(3).unwrap();
        assert_eq!(z3.dual_group(), Err(Error::UnsupportedExponent(3)));
        assert_eq!(FinAbGroup::new(vec![0]), Err(Error::InvalidFactor));
    }

    #[test]
    fn dual_is_closed_under_products() {
        let grp = FinAbGroup::new(vec![2, 4]).unwrap();
        let d = grp.dual_group().unwrap();
        let set: HashSet<_> = d.iter().cloned().collect();
        for a in &d {
            for b in &d {
                assert!(set.contains(&a.mul(b)));
            }
        }
    }

    #[test]
    fn perp_examples() {
        let k = FinAbGroup::klein();
        assert_eq!(k.perp_of_elements(&[k.identity()]).unwrap().len(), 4);
        let all = k.dual_group().unwrap();
        assert_eq!(k.perp_of_characters(&all).unwrap(), vec![k.identity()]);
        assert_eq!(k.perp_of_characters(&[k.trivial_character()]).unwrap(), k.elements());
    }

    #[test]
    fn perp_order_identity() {
        let grp = FinAbGroup::new(vec![2, 4]).unwrap();
        for x in grp.elements() {
            let s = grp.generated_subgroup(&[x]).unwrap();
            let p = grp.perp_of_elements(&s).unwrap();
            assert_eq!(s.len() * p.len(), grp.order());
        }
    }

    #[test]
    fn quotients() {
        let k = FinAbGroup::klein();
        let q = quotient_of(&k, &k.elements()).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.group(), &FinAbGroup::trivial());

        let q = quotient_of(&k, &[k.identity()]).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.group().factors(), &[2, 2]);
        // the identity isomorphism is found first
        assert_eq!(q.representatives(), k.elements().as_slice());

        let sub = vec![g(&[0, 0]), g(&[0, 1])];
        let q = quotient_of(&k, &sub).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.project(&g(&[1, 1])), Some(g(&[1])));
        assert_eq!(q.project(&g(&[0, 1])), Some(g(&[0])));

        let z8 = FinAbGroup::cyclic(8).unwrap();
        let two = z8.generated_subgroup(&[g(&[2])]).unwrap();
        let four = z8.generated_subgroup(&[g(&[4])]).unwrap();
        let q = quotient_group(&z8, &two, &four).unwrap();
        assert_eq!(q.group().factors(), &[2]);
        assert!(quotient_group(&z8, &four, &two).is_err());
    }

    #[test]
    fn quotient_structure_is_detected() {
        // (Z2 × Z4)/<(1,2)> ≅ Z4
        let grp = FinAbGroup::new(vec![2, 4]).unwrap();
        let h = grp.generated_subgroup(&[g(&[1, 2])]).unwrap();
        let q = quotient_of(&grp, &h).unwrap();
        assert_eq!(q.group().factors(), &[4]);
        // projection is a homomorphism with kernel h
        for a in grp.elements() {
            for b in grp.elements() {
                let lhs = q.project(&grp.op(&a, &b)).unwrap();
                let rhs = q.group().op(&q.project(&a).unwrap(), &q.project(&b).unwrap());
                assert_eq!(lhs, rhs);
            }
            assert_eq!(q.project(&a).unwrap() == q.group().identity(), h.contains(&a));
        }
        assert_eq!(invariant_factor_chains(8), vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
    }

    fn klein_theta(zeta_sq: i64) -> Bicharacter {
        let m = Matrix::from_int_rows(&[&[zeta_sq, -1], &[-1, 1]], 1);
        Bicharacter::new(FinAbGroup::klein(), m).unwrap()
    }

    #[test]
    fn klein_bicharacter_checks() {
        for zs in [1, -1] {
            let r = bicharacter_checks(&klein_theta(zs));
            assert_eq!(r, BicharacterReport { symmetric: true, nondegenerate: true, orthogonality: true });
        }
    }

    #[test]
    fn degenerate_bicharacter_on_z2() {
        let t = Bicharacter::trivial(FinAbGroup::cyclic(2).unwrap());
        let r = bicharacter_checks(&t);
        assert!(r.symmetric);
        assert!(!r.nondegenerate);
        assert!(!r.orthogonality);
    }

    #[test]
    fn z4_iota_bicharacter() {
        let z4 = FinAbGroup::cyclic(4).unwrap();
        let t = Bicharacter::new(z4.clone(), Matrix::from_rows(vec![vec![Scalar::iota()]]).unwrap()).unwrap();
        // brute-force oracle: Σ_a ι^{ab} over a = 0..3
        let i = Scalar::iota();
        for b in 0..4u32 {
            let s: Scalar = (0..4u32).map(|a| i.pow(a * b)).sum();
            let expect = if b == 0 { Scalar::from_int(4) } else { Scalar::zero() };
            assert_eq!(s, expect);
        }
        assert!(t.is_nondegenerate());
        assert!(t.orthogonality());
    }

    #[test]
    fn invalid_bicharacter_rejected() {
        let m = Matrix::from_rows(vec![vec![Scalar::iota()]]).unwrap();
        assert!(Bicharacter::new(FinAbGroup::cyclic(2).unwrap(), m).is_err());
    }

    #[test]
    fn nondegenerate_theta_gives_bijection_to_dual() {
        for zs in [1, -1] {
            let t = klein_theta(zs);
            let k = t.group().clone();
            let imgs: HashSet<_> = k.elements().iter().map(|x| t.left_character(x)).collect();
            assert_eq!(imgs.len(), k.order());
        }
    }
}
