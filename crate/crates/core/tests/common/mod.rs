//! Hand-entered multiplication tables of the group-like bases, used as the
//! oracle for the generated ones. Coefficient vectors are indexed by
//! `ω1..ω4, η1..η4`.
#![allow(dead_code)]

use ydforge::examples::{ExampleSpec, Which};
use ydforge::Scalar;

pub type Table = Vec<Vec<Vec<Scalar>>>;

pub struct Tables {
    pub omega_omega: Table,
    pub omega_eta: Table,
    pub eta_omega: Table,
    pub eta_eta: Table,
}

fn unit(k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 8];
    v[k] = Scalar::one();
    v
}

/// `a·η_i + b·η_j` (1-based η indices).
fn eta_pair(i: usize, a: &Scalar, j: usize, b: &Scalar) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); 8];
    v[3 + i] = a.clone();
    v[3 + j] = b.clone();
    v
}

fn omega_comb(c: [Scalar; 4]) -> Vec<Scalar> {
    let mut v = c.to_vec();
    v.extend((0..4).map(|_| Scalar::zero()));
    v
}

pub fn tables(spec: ExampleSpec) -> Tables {
    let z = spec.zeta.embed();
    let z_inv = z.inv().unwrap();
    let iota = Scalar::iota();
    let half = Scalar::rational(1, 2);
    let iz2 = &iota * &(&z * &z);
    let p = &half * &(&Scalar::one() + &iz2);
    let m = &half * &(&Scalar::one() - &iz2);

    let omega_omega: Table = (0..4).map(|i| (0..4).map(|j| unit(i ^ j)).collect()).collect();

    // rows η_j, columns ω_i, entry ω_i η_j
    let displayed: Vec<Vec<Vec<Scalar>>> = vec![
        vec![unit(4), eta_pair(2, &m, 4, &p), eta_pair(2, &p, 4, &m), unit(6)],
        vec![unit(5), eta_pair(1, &p, 3, &m), eta_pair(1, &m, 3, &p), unit(7)],
        vec![unit(6), eta_pair(2, &p, 4, &m), eta_pair(2, &m, 4, &p), unit(4)],
        vec![unit(7), eta_pair(1, &m, 3, &p), eta_pair(1, &p, 3, &m), unit(5)],
    ];
    let omega_eta: Table = (0..4).map(|i| (0..4).map(|j| displayed[j][i].clone()).collect()).collect();

    // rows η_j, columns ω_i, entry η_j ω_i
    let eta_omega: Table = match spec.which {
        Which::One => displayed.clone(),
        Which::Two => vec![
            vec![unit(4), eta_pair(2, &p, 4, &m), eta_pair(2, &m, 4, &p), unit(6)],
            vec![unit(5), eta_pair(1, &m, 3, &p), eta_pair(1, &p, 3, &m), unit(7)],
            vec![unit(6), eta_pair(2, &m, 4, &p), eta_pair(2, &p, 4, &m), unit(4)],
            vec![unit(7), eta_pair(1, &p, 3, &m), eta_pair(1, &m, 3, &p), unit(5)],
        ],
    };

    let c = &(&iota * &z_inv) * &half;
    let hz = &z * &half;
    let a = omega_comb([half.clone(), -c.clone(), c.clone(), half.clone()]);
    let a2 = omega_comb([half.clone(), c.clone(), -c.clone(), half.clone()]);
    let b = omega_comb([hz.clone(), half.clone(), half.clone(), -hz.clone()]);
    let b2 = omega_comb([-hz.clone(), half.clone(), half.clone(), hz.clone()]);
    let eta_eta: Table = match spec.which {
        Which::One => vec![
            vec![a.clone(), b.clone(), a2.clone(), b2.clone()],
            vec![b.clone(), a2.clone(), b2.clone(), a.clone()],
            vec![a2.clone(), b2.clone(), a.clone(), b.clone()],
            vec![b2.clone(), a.clone(), b.clone(), a2.clone()],
        ],
        Which::Two => vec![
            vec![b.clone(), a.clone(), b2.clone(), a2.clone()],
            vec![a2.clone(), b.clone(), a.clone(), b2.clone()],
            vec![b2.clone(), a2.clone(), b.clone(), a.clone()],
            vec![a.clone(), b2.clone(), a2.clone(), b.clone()],
        ],
    };

    Tables { omega_omega, omega_eta, eta_omega, eta_eta }
}
