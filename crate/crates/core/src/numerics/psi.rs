use crate::error::{domain, Result};

/// B_{2k}/(2k) for k = 1..8.
const ASYMPTOTIC: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Digamma ψ(x) for x > 0.
pub fn psi(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("psi needs a finite x > 0, got {x}")));
    }
    Ok(psi_unchecked(x))
}

pub(crate) fn psi_unchecked(mut x: f64) -> f64 {
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut series = 0.0;
    let mut p = inv2;
    for c in ASYMPTOTIC {
        series += c * p;
        p *= inv2;
    }
    shift + x.ln() - 0.5 / x - series
}

/// H(x) = ψ(x+1) + γ, the continuous harmonic number.
pub fn harmonic(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    psi_unchecked(x + 1.0) + EULER_GAMMA
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn special_values() {
        assert!((psi(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((psi(0.5).unwrap() + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-14);
        assert!((psi(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        assert!(psi(0.0).is_err());
        assert!(psi(-1.5).is_err());
    }

    #[test]
    fn recurrence_and_duplication() {
        for x in [0.5, 1.0, 2.5, 7.0] {
            let r = psi(x + 1.0).unwrap() - psi(x).unwrap() - 1.0 / x;
            assert!(r.abs() < 1e-12);
            let d = psi(2.0 * x).unwrap() - 0.5 * psi(x).unwrap() - 0.5 * psi(x + 0.5).unwrap() - 2f64.ln();
            assert!(d.abs() < 1e-12);
        }
    }

    #[test]
    fn harmonic_integers() {
        assert!((harmonic(3.0) - 11.0 / 6.0).abs() < 1e-14);
        assert_eq!(harmonic(0.0), 0.0);
    }
}
