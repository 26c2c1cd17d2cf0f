//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use ydforge::abelian::{Character, FinAbGroup, GroupElement};
use ydforge::examples::{
    build_example, characters_of_example, check_matrix_rep, check_representations, example_theta,
    grouplike_basis_tables, matrix_rep_example2, y_fourth_power, BuiltExample, ExampleSpec, Which,
};
use ydforge::grouplike::{enumerate_grouplikes, GroupLikeContext};
use ydforge::linalg::Matrix;
use ydforge::rmat::{build_rmatrix, check_rmatrix, theta_character, RMatrix};
use ydforge::ydcore::{AlgElement, Axiom, Tensor2, VerifyOptions, YDAlgebra, YDParts};
use ydforge::{Scalar, ZetaKind};

type Outcome = Result<String, String>;
type Criterion = fn(&[BuiltExample]) -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_built() -> Vec<BuiltExample> {
    ExampleSpec::all().into_iter().map(build_example).collect()
}

fn context(b: &BuiltExample) -> GroupLikeContext {
    GroupLikeContext::new(&b.algebra, b.basis_change.clone()).expect("group-like basis")
}

fn axiom_suite(built: &[BuiltExample]) -> Outcome {
    for b in built {
        let r = b.algebra.verify_axioms();
        ensure(r.all_pass(), || format!("{}:\n{r}", b.spec))?;
    }
    Ok(format!("{} instantiations, 9 checks each", built.len()))
}

fn table_reproduction(built: &[BuiltExample]) -> Outcome {
    let mut entries = 0;
    for b in built {
        let got = grouplike_basis_tables(&b.algebra, &b.basis_change).map_err(|e| e.to_string())?;
        let want = common::tables(b.spec);
        let pairs = [
            ("ω·ω", &got.omega_omega, &want.omega_omega),
            ("ω·η", &got.omega_eta, &want.omega_eta),
            ("η·ω", &got.eta_omega, &want.eta_omega),
            ("η·η", &got.eta_eta, &want.eta_eta),
        ];
        for (name, g, w) in pairs {
            for i in 0..4 {
                for j in 0..4 {
                    ensure(g[i][j].coeffs() == w[i][j].as_slice(), || {
                        format!("{}: {name} entry ({}, {}) differs", b.spec, i + 1, j + 1)
                    })?;
                    entries += 1;
                }
            }
        }
        let gl = b.grouplike_algebra();
        let prod = |i: usize, j: usize| gl.multiply(&gl.basis(i), &gl.basis(j)).unwrap();
        match b.spec.which {
            Which::One => {
                for i in 0..8 {
                    for j in 0..8 {
                        ensure(prod(i, j) == prod(j, i), || format!("{}: not commutative at ({i}, {j})", b.spec))?;
                    }
                }
            }
            Which::Two => {
                for j in 4..8 {
                    ensure(prod(1, j) == prod(j, 2) && prod(2, j) == prod(j, 1), || {
                        format!("{}: ω2η = ηω3 fails for η index {j}", b.spec)
                    })?;
                }
                ensure(prod(4, 5) != prod(5, 4), || format!("{}: η1η2 = η2η1", b.spec))?;
            }
        }
    }
    Ok(format!("{entries} entries matched"))
}

fn lemma_checks(built: &[BuiltExample]) -> Outcome {
    let one = AlgElement::basis(8, 0);
    let x2 = AlgElement::basis(8, 2);
    for b in built {
        let z = b.spec.zeta.embed();
        let z2 = &z * &z;
        let y4 = y_fourth_power(b);
        let is_one = y4 == one;
        let is_x2 = y4 == x2;
        let (one_case, x2_case) = match b.spec.which {
            Which::One => (-Scalar::one(), Scalar::one()),
            Which::Two => (Scalar::one(), -Scalar::one()),
        };
        ensure(is_one == (z2 == one_case) && is_x2 == (z2 == x2_case), || {
            format!("{}: y⁴ = {}", b.spec, b.algebra.format(&y4))
        })?;
    }

    let grp = FinAbGroup::klein();
    let els = grp.elements();
    let n = Scalar::from_int(els.len() as i64);
    for zeta in ZetaKind::ALL {
        let theta = example_theta(zeta);
        // Σ_h θ(g, h) = |G| δ_{g,1} in each argument
        for g in &els {
            let expected = if *g == grp.identity() { n.clone() } else { Scalar::zero() };
            let left: Scalar = els.iter().map(|h| theta.eval(g, h)).sum();
            let right: Scalar = els.iter().map(|h| theta.eval(h, g)).sum();
            ensure(left == expected && right == expected, || format!("orthogonality fails for ζ = {zeta} at {g}"))?;
        }
        let pair = build_rmatrix(&theta).map_err(|e| e.to_string())?;
        ensure(pair.r.multiply(&pair.inverse).is_identity(), || format!("R·R⁻¹ ≠ 1⊗1 for ζ = {zeta}"))?;
        ensure(quasitriangular_oracle(&pair.r), || format!("quasitriangularity oracle fails for ζ = {zeta}"))?;
        let rep = check_rmatrix(&pair.r);
        ensure(rep.all_pass(), || format!("R-matrix report for ζ = {zeta}: {rep:?}"))?;
    }
    Ok("y⁴ cases, orthogonality, R·R⁻¹ and both coproduct axioms for all ζ".into())
}

/// `(Δ⊗id)R = R₁₃R₂₃` and `(id⊗Δ)R = R₁₃R₁₂`, coefficientwise on `G×G×G`.
fn quasitriangular_oracle(r: &RMatrix) -> bool {
    let grp = r.group();
    let els = grp.elements();
    for a in &els {
        for b in &els {
            for c in &els {
                let delta = |x: &GroupElement, y: &GroupElement, z: &GroupElement| {
                    if x == y {
                        r.get(x, z).clone()
                    } else {
                        Scalar::zero()
                    }
                };
                // R₁₃R₂₃ = Σ r(a,u) r(b,v) a⊗b⊗uv
                let r13r23: Scalar = els.iter().map(|u| r.get(a, u) * r.get(b, &grp.op(c, &grp.inverse(u)))).sum();
                if delta(a, b, c) != r13r23 {
                    return false;
                }
                // R₁₃R₁₂ = Σ r(u,c) r(v,b) uv⊗b⊗c
                let r13r12: Scalar = els.iter().map(|u| r.get(u, c) * r.get(&grp.op(a, &grp.inverse(u)), b)).sum();
                let lhs = if b == c { r.get(a, b).clone() } else { Scalar::zero() };
                if lhs != r13r12 {
                    return false;
                }
            }
        }
    }
    true
}

fn representations(built: &[BuiltExample]) -> Outcome {
    for b in built {
        let chars = characters_of_example(b.spec);
        let z = b.spec.zeta.embed();
        let half = Scalar::rational(1, 2);
        for c in &chars.characters {
            let (x, y) = (&c.x, &c.y);
            let y2 = match b.spec.which {
                Which::One => &half * &(&(&Scalar::one() + &(&z * x)) + &(&x.pow(2) - &(&z * &x.pow(3)))),
                Which::Two => &half * &(&(&z + x) + &(&x.pow(3) - &(&z * &x.pow(2)))),
            };
            ensure(x.pow(4).is_one() && y.pow(2) == y2, || format!("{}: {} breaks the relations", b.spec, c.name))?;
            if b.spec.which == Which::Two {
                ensure(x * y == y * &x.pow(3), || format!("{}: {} breaks xy = yx³", b.spec, c.name))?;
            }
            // multiplicative on the structure constants
            let v = c.values();
            for i in 0..8 {
                for j in 0..8 {
                    let p = b.algebra.multiply(&b.algebra.basis(i), &b.algebra.basis(j)).unwrap();
                    let lhs: Scalar = p.coeffs().iter().zip(&v).map(|(a, w)| a * w).sum();
                    ensure(lhs == &v[i] * &v[j], || format!("{}: {} not multiplicative", b.spec, c.name))?;
                }
            }
        }
        let expected = if b.spec.which == Which::One { 8 } else { 4 };
        ensure(chars.characters.len() == expected, || format!("{}: wrong number of characters", b.spec))?;
        let rep = check_representations(b, &chars);
        ensure(rep.certifies_decomposition() && rep.distinct_characters == expected, || {
            format!("{}: {rep:?}", b.spec)
        })?;
        if b.spec.which == Which::Two {
            let m = check_matrix_rep(b.spec.zeta, &matrix_rep_example2(b.spec.zeta));
            ensure(m.all_pass(), || format!("{}: block matrices {m:?}", b.spec))?;
        }
    }
    Ok("A ≅ K⁸ for example 1, A ≅ K⁴ ⊕ M(2×2,K) for example 2, all ζ".into())
}

fn core_computation(built: &[BuiltExample]) -> Outcome {
    for b in built {
        let ctx = context(b);
        let eta1 = ctx.label_index("eta1").unwrap();
        let r = ctx.compute_core(eta1).map_err(|e| e.to_string())?;
        let checks_ok = r.cross_checks.len() == 9 && r.cross_checks.iter().all(|c| c.holds);
        ensure(
            r.stabilizers.index == 4
                && r.omega_basis == ["omega1", "omega2", "omega3", "omega4"]
                && r.eta_prime_independent
                && checks_ok
                && r.trivial
                && !r.completely_trivial,
            || format!("{}: core of η1 {r:#?}", b.spec),
        )?;
        let aw = r.action_witness.as_ref().map(|w| w.rendered.as_str());
        let cw = r.coaction_witness.as_ref().map(|w| w.rendered.as_str());
        ensure(
            aw == Some("g2.ω2 = ω3") && cw == Some("δ(ω2) = g1 ⊗ (1/2·ω2 + 1/2·ω3) + g3 ⊗ (1/2·ω2 - 1/2·ω3)"),
            || format!("{}: witnesses {aw:?} / {cw:?}", b.spec),
        )?;
        // δ(ω2) = ½(g1+g3)⊗ω2 + ½(g1−g3)⊗ω3 read off from the grading
        let gl = ctx.grouplike_algebra();
        let half = Scalar::rational(1, 2);
        let mut want_g1 = vec![Scalar::zero(); 8];
        let mut want_g3 = vec![Scalar::zero(); 8];
        want_g1[1] = half.clone();
        want_g1[2] = half.clone();
        want_g3[1] = half.clone();
        want_g3[2] = -half.clone();
        let w2 = gl.basis(1);
        let g = |e: &[u32]| GroupElement::new(e.to_vec());
        ensure(
            gl.coact_component(&g(&[0, 0]), &w2).unwrap().coeffs() == want_g1.as_slice()
                && gl.coact_component(&g(&[0, 1]), &w2).unwrap().coeffs() == want_g3.as_slice()
                && gl.act(&g(&[1, 0]), &w2).unwrap() == gl.basis(2),
            || format!("{}: ω2 witnesses", b.spec),
        )?;

        let omega2 = ctx.label_index("omega2").unwrap();
        let r = ctx.compute_core(omega2).map_err(|e| e.to_string())?;
        ensure(
            r.stabilizers.index == 1 && r.omega_basis == ["omega1"] && r.completely_trivial && r.all_checks_pass(),
            || format!("{}: core of ω2 {r:#?}", b.spec),
        )?;
    }
    Ok("η1: index 4, Span(ω1..ω4), trivial, not completely trivial; ω2: index 1, Span(1)".into())
}

fn conjecture_scan(built: &[BuiltExample]) -> Outcome {
    for b in built {
        let scan = context(b).conjecture_scan().map_err(|e| e.to_string())?;
        ensure(scan.all_cores_trivial, || format!("{}: a core is not trivial", b.spec))?;
    }
    Ok("all 64 cores trivial".into())
}

fn corollary(built: &[BuiltExample]) -> Outcome {
    let mut total = 0;
    for b in built {
        let ctx = context(b);
        for e in 0..8 {
            for f in 0..8 {
                let c = ctx.corollary_equivalence(e, f).map_err(|e| e.to_string())?;
                ensure(c.consistent, || format!("{}: pair ({e}, {f}) {c:?}", b.spec))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total}/{total} ordered pairs consistent"))
}

fn enumeration(built: &[BuiltExample]) -> Outcome {
    for b in built {
        let set = enumerate_grouplikes(&b.algebra).map_err(|e| format!("{}: {e}", b.spec))?;
        let expected = b.basis_change.elements();
        ensure(set.elements.len() == 8 && expected.iter().all(|e| set.elements.contains(e)), || {
            format!("{}: found {} group-likes", b.spec, set.elements.len())
        })?;
    }
    Ok("8 group-likes per instantiation, equal to the basis up to order".into())
}

fn property_suites(built: &[BuiltExample]) -> Outcome {
    // σ∘σ⁻¹ = σ⁻¹∘σ = id on all basis pairs
    for b in built {
        let a = &b.algebra;
        for i in 0..8 {
            for j in 0..8 {
                let t = Tensor2::basis(8, i, j);
                let s = a.quasisymmetry_tensor(&t).unwrap();
                let back = a.quasisymmetry_inverse(&s).unwrap();
                let other = a.quasisymmetry_tensor(&a.quasisymmetry_inverse(&t).unwrap()).unwrap();
                ensure(back == t && other == t, || format!("{}: σ⁻¹ fails at ({i}, {j})", b.spec))?;
            }
        }
    }

    let implication = antipode_implication(built)?;

    // perp biduality on every subset of Z2 × Z2, for elements and characters
    let grp = FinAbGroup::klein();
    let els = grp.elements();
    let dual = grp.dual_group().unwrap();
    for mask in 0u32..16 {
        let s: Vec<GroupElement> = (0..4).filter(|k| mask >> k & 1 == 1).map(|k| els[k].clone()).collect();
        let back = grp.perp_of_characters(&grp.perp_of_elements(&s).unwrap()).unwrap();
        ensure(sorted(back) == closure_elements(&grp, &s), || format!("biduality fails for {s:?}"))?;
        let c: Vec<Character> = (0..4).filter(|k| mask >> k & 1 == 1).map(|k| dual[k].clone()).collect();
        let back = grp.perp_of_elements(&grp.perp_of_characters(&c).unwrap()).unwrap();
        let mut want = closure_characters(&c, &dual);
        let mut got: Vec<usize> = back.iter().map(|x| dual.iter().position(|d| d == x).unwrap()).collect();
        want.sort();
        got.sort();
        ensure(got == want, || format!("character biduality fails for mask {mask}"))?;
    }

    // ψ_{θ(g,·)} = φ_{g⁻¹}
    for b in built {
        let theta = example_theta(b.spec.zeta);
        for g in &els {
            let psi = b.algebra.psi_operator(&theta_character(&theta, g)).unwrap();
            ensure(&psi == b.algebra.action_matrix(&grp.inverse(g)).unwrap(), || {
                format!("{}: ψ_θ(g,·) ≠ φ_g⁻¹ at {g}", b.spec)
            })?;
        }
    }

    let flipped = corruption_sweep()?;
    Ok(format!(
        "σ∘σ⁻¹ on 512 pairs, antipode implication on {implication} premises, 32 biduality cases, ψ = φ on 32 cases, {flipped} corruptions detected"
    ))
}

fn sorted(mut v: Vec<GroupElement>) -> Vec<GroupElement> {
    v.sort();
    v.dedup();
    v
}

fn closure_elements(grp: &FinAbGroup, s: &[GroupElement]) -> Vec<GroupElement> {
    let mut set = vec![grp.identity()];
    loop {
        let mut next = set.clone();
        for a in &set {
            for b in s {
                next.push(grp.op(a, b));
            }
        }
        let next = sorted(next);
        if next.len() == set.len() {
            return next;
        }
        set = next;
    }
}

fn closure_characters(s: &[Character], dual: &[Character]) -> Vec<usize> {
    let mut set = vec![dual.iter().position(Character::is_trivial).unwrap()];
    loop {
        let mut next = set.clone();
        for &a in &set {
            for c in s {
                let prod = dual[a].mul(c);
                next.push(dual.iter().position(|d| *d == prod).unwrap());
            }
        }
        next.sort();
        next.dedup();
        if next.len() == set.len() {
            return next;
        }
        set = next;
    }
}

/// Whenever (a)-(h) hold, (i) must hold as well. Premises come from the
/// examples, their group-like forms, their cores, several group algebras,
/// and conjugates by fixed basis changes.
fn antipode_implication(built: &[BuiltExample]) -> Result<usize, String> {
    let mut family: Vec<YDAlgebra> = Vec::new();
    for b in built {
        family.push(b.algebra.clone());
        family.push(b.grouplike_algebra());
        let ctx = context(b);
        for e in [0, 4] {
            family.push(ctx.core_algebra_for(e).map_err(|e| e.to_string())?);
        }
    }
    let k4 = FinAbGroup::klein();
    for basis_group in [FinAbGroup::cyclic(2).unwrap(), FinAbGroup::cyclic(4).unwrap(), k4.clone()] {
        family.push(YDAlgebra::group_algebra(&basis_group, &k4));
    }
    let shear = Matrix::from_int_rows(
        &[
            &[1, 1, 0, 0, 0, 0, 0, 2],
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 3, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0, 0],
            &[0, -1, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
        ],
        1,
    );
    for b in built {
        let labels = (1..=8).map(|i| format!("v{i}")).collect();
        family.push(b.algebra.change_basis(&shear, labels).map_err(|e| e.to_string())?);
    }
    let premises = [
        Axiom::Algebra,
        Axiom::Coalgebra,
        Axiom::Action,
        Axiom::Coaction,
        Axiom::Dimodule,
        Axiom::Bialgebra,
        Axiom::Equivariance,
        Axiom::Antipode,
    ];
    let mut count = 0;
    for a in &family {
        let r = a.verify_axioms();
        if premises.iter().all(|&p| r.holds(p) == Some(true)) {
            count += 1;
            ensure(r.holds(Axiom::AntipodeEquivariance) == Some(true), || format!("implication fails:\n{r}"))?;
        }
    }
    ensure(count == family.len(), || format!("only {count} of {} premises hold", family.len()))?;
    Ok(count)
}

/// Adds 1 to each entry of each structure tensor of example 1 (ζ = ι) in
/// turn; every corrupted algebra must fail at least one check.
fn corruption_sweep() -> Result<usize, String> {
    let base = build_example(ExampleSpec::new(Which::One, ZetaKind::PlusI)).algebra.to_parts();
    let n = base.dim;
    let mut variants: Vec<(String, YDParts)> = Vec::new();
    let bump = |s: &mut Scalar| *s = &*s + &Scalar::one();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut p = base.clone();
                bump(&mut p.mult[i][j][k]);
                variants.push((format!("mult[{i}][{j}][{k}]"), p));
                let mut p = base.clone();
                bump(&mut p.coprod[i][j][k]);
                variants.push((format!("coprod[{i}][{j}][{k}]"), p));
            }
            let mut p = base.clone();
            bump(p.antipode.get_mut(i, j));
            variants.push((format!("antipode[{i}][{j}]"), p));
            for g in 0..base.action.len() {
                let mut p = base.clone();
                bump(p.action[g].matrix.get_mut(i, j));
                variants.push((format!("action[{g}][{i}][{j}]"), p));
                let mut p = base.clone();
                bump(p.coaction[g].matrix.get_mut(i, j));
                variants.push((format!("coaction[{g}][{i}][{j}]"), p));
            }
        }
        let mut p = base.clone();
        bump(&mut p.unit[i]);
        variants.push((format!("unit[{i}]"), p));
        let mut p = base.clone();
        bump(&mut p.counit[i]);
        variants.push((format!("counit[{i}]"), p));
    }
    let opts = VerifyOptions { fail_fast: true };
    for (name, parts) in &variants {
        let a = YDAlgebra::from_parts(parts.clone()).map_err(|e| format!("{name}: {e}"))?;
        ensure(!a.verify_axioms_with(opts).all_pass(), || format!("corrupting {name} went undetected"))?;
    }
    Ok(variants.len())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let built = all_built();
    let criteria: [(&str, Criterion); 9] = [
        ("axiom suite", axiom_suite),
        ("table reproduction", table_reproduction),
        ("lemma checks", lemma_checks),
        ("representation theory", representations),
        ("core computation", core_computation),
        ("conjecture scan", conjecture_scan),
        ("corollary equivalence", corollary),
        ("group-like enumeration", enumeration),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run(&built) {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{:.2?}]", k + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
