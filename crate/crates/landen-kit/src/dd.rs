//! Minimal double-double arithmetic for the cancellation-prone lattice sums.
//!
//! The parity-specific sums (cn/sn over the shifted lattices, alternating dn,
//! and the cubic modulus-map sum) cancel from O(1) terms down to a scale of
//! order sqrt(m~/m), which for large p and small m is far below the f64
//! rounding floor of the individual terms. Those sums are therefore formed
//! from ~32-digit values: Jacobi functions come from the Maclaurin series
//! plus exact argument doubling (rational operations only), and K(m) from the
//! AGM, all carried out in unevaluated double-double form. Only the final
//! sum is rounded back to f64.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2b) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2b + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, other);
        let p2 = p2 + self.lo * other;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        // One double-double Newton step on the f64 estimate.
        let y0 = Dd::from_f64(self.hi.sqrt());
        y0.add(self.div(y0)).mul_f64(0.5)
    }

    #[inline]
    pub fn sqr(self) -> Dd {
        self.mul(self)
    }
}

/// K(m) by the AGM in double-double precision, taking the complementary
/// parameter (which carries the information near m = 1). Requires mc > 0.
pub(crate) fn complete_k_dd(mc: Dd) -> Dd {
    let mut a = Dd::ONE;
    let mut b = mc.sqrt();
    for _ in 0..64 {
        if (a.sub(b)).hi.abs() <= 1e-33 * a.hi {
            break;
        }
        let an = a.add(b).mul_f64(0.5);
        b = a.mul(b).sqrt();
        a = an;
    }
    let half_pi = Dd { hi: std::f64::consts::FRAC_PI_2, lo: 6.123233995736766e-17 };
    half_pi.div(a)
}

const SERIES_ORDER: usize = 44;
const SERIES_BASE: f64 = 0.25;

/// Maclaurin coefficients of sn, cn, dn at one parameter m, reusable across
/// evaluation points. The nearest singularity is at distance K'(m) >= pi/2,
/// so at |x0| <= 1/4 the order-44 truncation sits below the double-double
/// rounding floor for every m in [0, 1].
pub(crate) struct DdSeries {
    m: Dd,
    s: [Dd; SERIES_ORDER + 1],
    c: [Dd; SERIES_ORDER + 1],
    d: [Dd; SERIES_ORDER + 1],
}

impl DdSeries {
    pub fn new(md: Dd) -> Self {
        let mut s = [Dd::ZERO; SERIES_ORDER + 1];
        let mut c = [Dd::ZERO; SERIES_ORDER + 1];
        let mut d = [Dd::ZERO; SERIES_ORDER + 1];
        c[0] = Dd::ONE;
        d[0] = Dd::ONE;
        for n in 0..SERIES_ORDER {
            let mut cd = Dd::ZERO;
            let mut sd = Dd::ZERO;
            let mut sc = Dd::ZERO;
            for i in 0..=n {
                cd = cd.add(c[i].mul(d[n - i]));
                sd = sd.add(s[i].mul(d[n - i]));
                sc = sc.add(s[i].mul(c[n - i]));
            }
            let inv = Dd::from_f64(n as f64 + 1.0).recip();
            s[n + 1] = cd.mul(inv);
            c[n + 1] = sd.mul(inv).neg();
            d[n + 1] = sc.mul(inv).mul(md).neg();
        }
        DdSeries { m: md, s, c, d }
    }

    /// sn, cn, dn at x: series at x / 2^n followed by n doubling steps.
    pub fn eval(&self, x: Dd) -> (Dd, Dd, Dd) {
        let mut halvings = 0u32;
        let mut x0 = x;
        while x0.hi.abs() > SERIES_BASE {
            x0 = x0.mul_f64(0.5);
            halvings += 1;
        }

        let horner = |coef: &[Dd; SERIES_ORDER + 1]| {
            let mut acc = Dd::ZERO;
            for &a in coef.iter().rev() {
                acc = acc.mul(x0).add(a);
            }
            acc
        };
        let mut sn = horner(&self.s);
        let mut cn = horner(&self.c);
        let mut dn = horner(&self.d);

        for _ in 0..halvings {
            let sn2 = sn.sqr();
            let denom = Dd::ONE.sub(self.m.mul(sn2.sqr()));
            let sn_new = sn.mul(cn).mul(dn).mul_f64(2.0).div(denom);
            let cn_new = cn.sqr().sub(sn2.mul(dn.sqr())).div(denom);
            let dn_new = dn.sqr().sub(self.m.mul(sn2).mul(cn.sqr())).div(denom);
            sn = sn_new;
            cn = cn_new;
            dn = dn_new;
        }
        (sn, cn, dn)
    }
}

/// One-shot evaluation; prefer [`DdSeries`] when sharing a parameter.
pub(crate) fn jacobi_dd(x: Dd, m: f64) -> (Dd, Dd, Dd) {
    DdSeries::new(Dd::from_f64(m)).eval(x)
}
