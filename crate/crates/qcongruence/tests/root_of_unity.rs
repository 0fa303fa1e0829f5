//! Numeric tripwire: every modulus-index-one checker verdict must agree with
//! a floating-point evaluation of both sides at a primitive n-th root of
//! unity.  Congruence modulo `Phi_n` means equality at every primitive n-th
//! root, so a Pass verdict with a large numeric gap (or vice versa) would
//! expose a bug in one of the two completely independent evaluation paths.

use num_complex::Complex64;
use qcongruence::congruences::{
    check_problem36, check_th31, check_th31_corollary, check_th33, check_th34, check_th35, Status,
};
use qcongruence::qseries::{preset, TermSpec};

const TOL: f64 = 1e-6;

fn root_of_unity(n: u64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64)
}

fn qpow(q: Complex64, e: i64) -> Complex64 {
    q.powi(e as i32)
}

/// `(sign * q^a; q^step)_len` evaluated numerically.
fn cpoch(q: Complex64, sign: i8, a: i64, step: u32, len: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for j in 0..len {
        acc *= Complex64::new(1.0, 0.0) - f64::from(sign) * qpow(q, a + (step as i64) * (j as i64));
    }
    acc
}

/// The truncated sum evaluated numerically, straight from the summand spec.
fn eval_sum(t: &TermSpec, upper: u32, q: Complex64) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..=upper {
        let ki = k as i64;
        let mut term = qpow(q, t.quad_coef * ki * ki + t.lin_coef * ki);
        if t.sign_k < 0 && k % 2 == 1 {
            term = -term;
        }
        for f in &t.factors {
            let p = cpoch(q, f.sign, f.a_exp, f.step, k);
            term *= p.powi(f.mult);
        }
        for a in &t.affine_factors {
            let v = Complex64::new(1.0, 0.0) + f64::from(a.sign) * qpow(q, a.c * ki + a.d);
            term *= v.powi(a.mult);
        }
        total += term;
    }
    total
}

fn agree(verdict: Status, lhs: Complex64, rhs: Complex64, label: &str) {
    let close = (lhs - rhs).norm() < TOL;
    assert_eq!(verdict == Status::Pass, close, "{label}: lhs={lhs} rhs={rhs}");
}

#[test]
fn first_truncation_matches_numeric() {
    for n in (3u64..=25).step_by(2) {
        let q = root_of_unity(n);
        let lhs = eval_sum(&preset("S1").unwrap(), (n - 1) as u32, q);
        let rhs = if n % 4 == 1 {
            let m = ((n - 1) / 4) as u32;
            cpoch(q, 1, 3, 4, m) / cpoch(q, 1, 4, 4, m)
        } else {
            Complex64::new(0.0, 0.0)
        };
        agree(check_th31(n).unwrap().status, lhs, rhs, &format!("thm31 n={n}"));

        let lhs = eval_sum(&preset("S1inv").unwrap(), (n - 1) as u32, q);
        let rhs = rhs * qpow(q, ((n * n - 1) / 4) as i64);
        agree(
            check_th31_corollary(n).unwrap().status,
            lhs,
            rhs,
            &format!("thm31_corollary n={n}"),
        );
    }
}

#[test]
fn alternating_cubed_truncation_matches_numeric() {
    for n in (3u64..=25).step_by(2) {
        let q = root_of_unity(n);
        let lhs = eval_sum(&preset("S3").unwrap(), (n - 1) as u32, q);
        let rhs = match n % 8 {
            1 | 3 => {
                let c = if n % 8 == 1 { 1 } else { 3 };
                let m8 = ((c * n - 1) / 8) as u32;
                let m4 = ((c * n - 1) / 4) as u32;
                cpoch(q, 1, 5, 8, m8) * cpoch(q, 1, 7, 8, m8) / cpoch(q, 1, 4, 4, m4)
            }
            _ => Complex64::new(0.0, 0.0),
        };
        agree(check_th33(n).unwrap().status, lhs, rhs, &format!("thm33 n={n}"));
    }
}

#[test]
fn alternating_linear_truncation_matches_numeric() {
    for n in (3u64..=25).step_by(2) {
        let q = root_of_unity(n);
        let ni = n as i64;
        let lhs = eval_sum(&preset("S4").unwrap(), (n - 1) as u32, q);
        let rhs = match n % 8 {
            1 | 3 => {
                let c = if n % 8 == 1 { 1 } else { 3 };
                let m = ((c * n - 1) / 8) as u32;
                let d = ((c * n - 1) / 4) as u32;
                cpoch(q, 1, 1, 4, m) * cpoch(q, 1, 2, 4, m) * cpoch(q, -1, 3, 4, m)
                    * cpoch(q, -1, 4, 4, m)
                    / cpoch(q, 1, 4, 4, d)
                    * qpow(q, (1 - ni * ni) / 8)
            }
            _ => {
                let c = if n % 8 == 5 { 1 } else { 3 };
                let m = ((c * n - 5) / 8) as u32;
                let d = ((c * n - 5) / 4) as u32;
                -(Complex64::new(1.0, 0.0) - qpow(q, 2))
                    * cpoch(q, -1, 3, 4, m)
                    * cpoch(q, -1, 4, 4, m)
                    * cpoch(q, 1, 5, 4, m)
                    * cpoch(q, 1, 6, 4, m)
                    / cpoch(q, 1, 4, 4, d)
                    * qpow(q, (9 - ni * ni) / 8)
            }
        };
        agree(check_th34(n).unwrap().status, lhs, rhs, &format!("thm34 n={n}"));
    }
}

#[test]
fn half_truncation_matches_numeric() {
    for n in (5u64..=25).step_by(4) {
        let q = root_of_unity(n);
        let ni = n as i64;
        let lhs = eval_sum(&preset("S5").unwrap(), ((n - 1) / 2) as u32, q);
        let rhs = if n % 8 == 1 {
            let m8 = ((n - 1) / 8) as u32;
            let m4 = ((n - 1) / 4) as u32;
            let h = ((n - 1) / 2) as u32;
            (cpoch(q, 1, 1, 4, m8) * cpoch(q, 1, 2, 4, m8)).powi(2) * cpoch(q, -1, 1, 1, h)
                / cpoch(q, 1, 4, 4, m4).powi(2)
                * qpow(q, -(1 - ni) * (1 - ni) / 4)
        } else {
            Complex64::new(0.0, 0.0)
        };
        agree(check_th35(n).unwrap().status, lhs, rhs, &format!("thm35 n={n}"));
    }
    for n in [7u64, 15, 23] {
        let q = root_of_unity(n);
        let lhs = eval_sum(&preset("S5").unwrap(), ((n - 1) / 2) as u32, q);
        agree(
            check_problem36(n).unwrap().status,
            lhs,
            Complex64::new(0.0, 0.0),
            &format!("prob36 n={n}"),
        );
    }
}
