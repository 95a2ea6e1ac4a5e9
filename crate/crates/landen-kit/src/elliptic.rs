//! Complete elliptic integrals, Jacobi elliptic functions for real and
//! complex argument, the minor (ratio) functions, and the Jacobi zeta
//! function.
//!
//! Evaluation strategy:
//! - K(m), E(m): arithmetic-geometric mean iteration (quadratic convergence).
//! - sn/cn/dn: descending AGM recursion with backward recovery of the
//!   amplitude; dn is recovered through the cancellation-free form
//!   sqrt(m' + m cn^2).
//! - For m above [`NEAR_ONE_M`] the argument is mapped through one or more
//!   exact quadratic descent steps toward the complementary parameter before
//!   the AGM is applied, so precision does not degrade as m -> 1.
//! - Complex argument: addition-theorem split into real-argument functions of
//!   the real part (parameter m) and the imaginary part (parameter 1 - m).
//! - Jacobi zeta: Carlson symmetric-form reduction of the incomplete
//!   second-kind integral.

use num_complex::Complex64;

use crate::carlson::{rd, rf};
use crate::error::{Error, Result};
use crate::modulus::ModulusParameter;

/// Denominator guard for ratio functions; below this the ratio has lost more
/// than six digits and the caller must resample.
pub const POLE_GUARD: f64 = 1e-9;

/// Above this parameter value, real-argument evaluation descends to a smaller
/// parameter first.
const NEAR_ONE_M: f64 = 0.9999;

/// Values of the three basic Jacobi elliptic functions at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Complex-argument counterpart of [`EllipticTriple`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexTriple {
    pub sn: Complex64,
    pub cn: Complex64,
    pub dn: Complex64,
}

/// The nine ratio ("minor") Jacobi functions, named numerator-denominator:
/// cs = cn/sn, nd = 1/dn, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinorKind {
    Cs,
    Ds,
    Ns,
    Sc,
    Dc,
    Nc,
    Cd,
    Sd,
    Nd,
}

impl MinorKind {
    pub const ALL: [MinorKind; 9] = [
        MinorKind::Cs,
        MinorKind::Ds,
        MinorKind::Ns,
        MinorKind::Sc,
        MinorKind::Dc,
        MinorKind::Nc,
        MinorKind::Cd,
        MinorKind::Sd,
        MinorKind::Nd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MinorKind::Cs => "cs",
            MinorKind::Ds => "ds",
            MinorKind::Ns => "ns",
            MinorKind::Sc => "sc",
            MinorKind::Dc => "dc",
            MinorKind::Nc => "nc",
            MinorKind::Cd => "cd",
            MinorKind::Sd => "sd",
            MinorKind::Nd => "nd",
        }
    }

    /// (numerator, denominator) selectors applied to a triple; `None` means 1.
    fn parts(self) -> (Option<usize>, Option<usize>) {
        // 0 = sn, 1 = cn, 2 = dn
        match self {
            MinorKind::Cs => (Some(1), Some(0)),
            MinorKind::Ds => (Some(2), Some(0)),
            MinorKind::Ns => (None, Some(0)),
            MinorKind::Sc => (Some(0), Some(1)),
            MinorKind::Dc => (Some(2), Some(1)),
            MinorKind::Nc => (None, Some(1)),
            MinorKind::Cd => (Some(1), Some(2)),
            MinorKind::Sd => (Some(0), Some(2)),
            MinorKind::Nd => (None, Some(2)),
        }
    }
}

impl std::str::FromStr for MinorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MinorKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown minor function '{s}'")))
    }
}

/// Complete elliptic integral of the first kind K(m).
///
/// Diverges logarithmically as m -> 1; m = 1 is rejected.
pub fn complete_k(mp: &ModulusParameter) -> Result<f64> {
    if mp.m() == 1.0 {
        return Err(Error::Domain("K(m) diverges at m = 1".into()));
    }
    let mut a = 1.0_f64;
    let mut b = mp.k_prime();
    for _ in 0..64 {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
    }
    Ok(std::f64::consts::FRAC_PI_2 / a)
}

/// Complete elliptic integral of the second kind E(m).
pub fn complete_e(mp: &ModulusParameter) -> Result<f64> {
    if mp.m() == 1.0 {
        return Ok(1.0);
    }
    if mp.m() == 0.0 {
        return Ok(std::f64::consts::FRAC_PI_2);
    }
    let mut a = 1.0_f64;
    let mut b = mp.k_prime();
    let mut c = mp.k();
    let mut sum = 0.5 * c * c;
    let mut pow = 0.5;
    for _ in 0..64 {
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        pow *= 2.0;
        sum += pow * c * c;
    }
    let k = std::f64::consts::FRAC_PI_2 / a;
    Ok(k * (1.0 - sum))
}

/// sn, cn, dn of a real argument.
pub fn jacobi_real(x: f64, mp: &ModulusParameter) -> Result<EllipticTriple> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    Ok(jacobi_mc(x, mp.m(), mp.m_complement()))
}

/// Internal evaluation carrying the complement explicitly.
fn jacobi_mc(x: f64, m: f64, mc: f64) -> EllipticTriple {
    if m == 0.0 {
        return EllipticTriple { sn: x.sin(), cn: x.cos(), dn: 1.0 };
    }
    if mc == 0.0 {
        let sech = 1.0 / x.cosh();
        return EllipticTriple { sn: x.tanh(), cn: sech, dn: sech };
    }
    if m > NEAR_ONE_M {
        return jacobi_near_one(x, mc);
    }

    // Ascending AGM on (1, k'), then backward amplitude recursion.
    const MAX_ITER: usize = 32;
    let mut a_seq = [0.0_f64; MAX_ITER + 1];
    let mut c_seq = [0.0_f64; MAX_ITER + 1];
    let mut a = 1.0_f64;
    let mut b = mc.sqrt();
    a_seq[0] = a;
    c_seq[0] = m.sqrt();
    let mut n = 0;
    while n < MAX_ITER {
        let c = 0.5 * (a - b);
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = an;
        n += 1;
        a_seq[n] = a;
        c_seq[n] = c;
    }

    let mut phi = (1u64 << n) as f64 * a * x;
    for i in (1..=n).rev() {
        let s = (c_seq[i] / a_seq[i] * phi.sin()).clamp(-1.0, 1.0);
        phi = 0.5 * (phi + s.asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    let dn = (mc + m * cn * cn).sqrt();
    EllipticTriple { sn, cn, dn }
}

/// Evaluation for m close to 1 via exact quadratic parameter descent.
///
/// With s = sqrt(1-m) and kd = (1-s)/(1+s), the functions at parameter m are
/// rational in the functions at parameter kd^2 evaluated at x/(1+kd). The
/// descent multiplies the distance to m = 1 by roughly 4/s per step, so at
/// most a few steps are needed. All combinations below are cancellation-free.
fn jacobi_near_one(x: f64, mc: f64) -> EllipticTriple {
    let s = mc.sqrt();
    let kd = (1.0 - s) / (1.0 + s);
    let one_minus_kd = 2.0 * s / (1.0 + s);
    let m_low = kd * kd;
    let mc_low = 4.0 * s / ((1.0 + s) * (1.0 + s));
    let t = jacobi_mc(x / (1.0 + kd), m_low, mc_low);
    let sn2 = t.sn * t.sn;
    let denom = 1.0 + kd * sn2;
    EllipticTriple {
        sn: (1.0 + kd) * t.sn / denom,
        cn: t.cn * t.dn / denom,
        dn: (t.cn * t.cn + one_minus_kd * sn2) / denom,
    }
}

/// One of the nine ratio functions at a real argument.
pub fn jacobi_minor(kind: MinorKind, x: f64, mp: &ModulusParameter) -> Result<f64> {
    let t = jacobi_real(x, mp)?;
    let parts = [t.sn, t.cn, t.dn];
    let (num, den) = kind.parts();
    let den_v = den.map(|i| parts[i]).unwrap_or(1.0);
    if den_v.abs() <= POLE_GUARD {
        return Err(Error::Pole(format!(
            "{}(x={x}) denominator magnitude {:.3e} below pole guard",
            kind.name(),
            den_v.abs()
        )));
    }
    let num_v = num.map(|i| parts[i]).unwrap_or(1.0);
    Ok(num_v / den_v)
}

/// sn, cn, dn of a complex argument z = x + iy via the addition-theorem
/// split into real-argument values at parameters m and 1 - m.
pub fn jacobi_complex(z: Complex64, mp: &ModulusParameter) -> Result<ComplexTriple> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {z}")));
    }
    let m = mp.m();
    let t = jacobi_real(z.re, mp)?;
    let u = jacobi_real(z.im, &mp.complement())?;
    let (s, c, d) = (t.sn, t.cn, t.dn);
    let (s1, c1, d1) = (u.sn, u.cn, u.dn);
    let delta = c1 * c1 + m * s * s * s1 * s1;
    if delta.abs() <= POLE_GUARD {
        return Err(Error::Pole(format!(
            "z = {z} lies within the pole guard of a lattice pole (denominator {delta:.3e})"
        )));
    }
    Ok(ComplexTriple {
        sn: Complex64::new(s * d1, c * d * s1 * c1) / delta,
        cn: Complex64::new(c * c1, -s * d * s1 * d1) / delta,
        dn: Complex64::new(d * c1 * d1, -m * s * c * s1) / delta,
    })
}

/// Ratio function of a complex argument.
pub fn jacobi_minor_complex(kind: MinorKind, z: Complex64, mp: &ModulusParameter) -> Result<Complex64> {
    let t = jacobi_complex(z, mp)?;
    let parts = [t.sn, t.cn, t.dn];
    let one = Complex64::new(1.0, 0.0);
    let (num, den) = kind.parts();
    let den_v = den.map(|i| parts[i]).unwrap_or(one);
    if den_v.norm() <= POLE_GUARD {
        return Err(Error::Pole(format!(
            "{}(z={z}) denominator magnitude {:.3e} below pole guard",
            kind.name(),
            den_v.norm()
        )));
    }
    let num_v = num.map(|i| parts[i]).unwrap_or(one);
    Ok(num_v / den_v)
}

/// Jacobi zeta function Z(x, m): the oscillatory part of the incomplete
/// second-kind integral. Odd in x and periodic with period 2K(m).
pub fn jacobi_zeta(x: f64, mp: &ModulusParameter) -> Result<f64> {
    if mp.m() == 1.0 {
        return Err(Error::Domain("Z(x, m) is not defined at m = 1".into()));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    let m = mp.m();
    if m == 0.0 {
        return Ok(0.0);
    }
    let k = complete_k(mp)?;
    let e = complete_e(mp)?;
    // Reduce to one period around the origin; Z is 2K-periodic.
    let period = 2.0 * k;
    let xr = x - period * (x / period).round();
    let t = jacobi_real(xr, mp)?;
    let e_inc = incomplete_e_from_sn_cn(t.sn, t.cn, m)?;
    Ok(e_inc - e / k * xr)
}

/// Incomplete E(phi, m) expressed through sin(phi) = sn, cos(phi) = cn,
/// using Carlson symmetric forms.
fn incomplete_e_from_sn_cn(sn: f64, cn: f64, m: f64) -> Result<f64> {
    if sn == 0.0 {
        return Ok(0.0);
    }
    let c2 = cn * cn;
    let q = 1.0 - m * sn * sn;
    Ok(sn * rf(c2, q, 1.0)? - m / 3.0 * sn * sn * sn * rd(c2, q, 1.0)?)
}
