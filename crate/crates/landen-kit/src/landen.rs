//! Order-p transformations with real shifts.
//!
//! The shifted lattices step by 2K(m)/p or 4K(m)/p. A p-term sum (or product)
//! of Jacobi functions over such a lattice, with the argument scaled by a
//! normalizing constant, reproduces a single Jacobi function at a smaller
//! parameter m~. This module computes the normalizers, the m -> m~ map and
//! its low-order closed forms, the sum/product function formulas for all
//! parities, and the period and equivalence relations that tie the different
//! routes to m~ together.

use crate::dd::{complete_k_dd, Dd, DdSeries};
use crate::elliptic::{complete_k, jacobi_real};
use crate::error::{Error, Result};
use crate::modulus::ModulusParameter;
use crate::report::ResidualReport;

/// Number of superposed terms p. p = 2 recovers the classical quadratic
/// transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Order(u32);

impl Order {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::Domain(format!("order must satisfy p >= 2, got {p}")));
        }
        Ok(Self(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }
}

/// Which of the two real shift lattices a formula walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftKind {
    /// Steps of 2K(m)/p.
    Real2K,
    /// Steps of 4K(m)/p.
    Real4K,
}

/// The p equally spaced shift values of one lattice, starting at 0.
#[derive(Debug, Clone)]
pub struct ShiftLattice {
    pub kind: ShiftKind,
    pub p: u32,
    pub points: Vec<f64>,
}

impl ShiftLattice {
    pub fn new(kind: ShiftKind, p: Order, mp: &ModulusParameter) -> Result<Self> {
        let k = complete_k(mp)?;
        let step = match kind {
            ShiftKind::Real2K => 2.0 * k / p.get() as f64,
            ShiftKind::Real4K => 4.0 * k / p.get() as f64,
        };
        Ok(Self {
            kind,
            p: p.get(),
            points: (0..p.get()).map(|j| j as f64 * step).collect(),
        })
    }
}

/// Normalizing constants and the transformed parameter for one (p, m).
///
/// `alpha` normalizes the dn sum on the 2K/p lattice and exists for every p.
/// `alpha1` (cn/sn sums on the 4K/p lattice) exists for odd p, `alpha2`
/// (alternating dn sum) and `a0` (the sn product constant) for even p. The
/// parity-specific normalizers diverge in the m -> 0 limit, so they are
/// absent at m = 0 as well.
#[derive(Debug, Clone)]
pub struct TransformData {
    pub p: u32,
    pub m: f64,
    pub alpha: f64,
    pub alpha1: Option<f64>,
    pub alpha2: Option<f64>,
    pub a0: Option<f64>,
    pub m_tilde: ModulusParameter,
}

/// Which basic function a sum/product formula targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Dn,
    Cn,
    Sn,
}

impl TransformKind {
    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Dn => "dn",
            TransformKind::Cn => "cn",
            TransformKind::Sn => "sn",
        }
    }
}

impl std::str::FromStr for TransformKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dn" => Ok(TransformKind::Dn),
            "cn" => Ok(TransformKind::Cn),
            "sn" => Ok(TransformKind::Sn),
            other => Err(Error::Domain(format!("unknown transform kind '{other}'"))),
        }
    }
}

// ---------------------------------------------------------------------------
// Raw lattice helpers, valid for any p >= 1. The sine-Gordon oracle uses
// these directly so that the single-term p = 1 profile is expressible.
// ---------------------------------------------------------------------------

pub(crate) fn lattice_2k(p: u32, mp: &ModulusParameter) -> Result<Vec<f64>> {
    let k = complete_k(mp)?;
    let step = 2.0 * k / p as f64;
    Ok((0..p).map(|j| j as f64 * step).collect())
}

pub(crate) fn lattice_4k(p: u32, mp: &ModulusParameter) -> Result<Vec<f64>> {
    let k = complete_k(mp)?;
    let step = 4.0 * k / p as f64;
    Ok((0..p).map(|j| j as f64 * step).collect())
}

/// 1 / sum_j dn(2(j-1)K/p).
pub(crate) fn alpha_raw(p: u32, mp: &ModulusParameter) -> Result<f64> {
    if mp.m() == 0.0 {
        return Ok(1.0 / p as f64);
    }
    let mut sum = 0.0;
    for &pt in &lattice_2k(p, mp)? {
        sum += jacobi_real(pt, mp)?.dn;
    }
    Ok(1.0 / sum)
}

/// 1 / sum_j cn(4(j-1)K/p); meaningful for odd p, diverges at m = 0.
pub(crate) fn alpha1_raw(p: u32, mp: &ModulusParameter) -> Result<f64> {
    Ok(DdCtx::new(p, mp)?.alpha1().to_f64())
}

/// 1 / sum_j (-1)^{j-1} dn(2(j-1)K/p); meaningful for even p, diverges at m = 0.
pub(crate) fn alpha2_raw(p: u32, mp: &ModulusParameter) -> Result<f64> {
    Ok(DdCtx::new(p, mp)?.alpha2().to_f64())
}

// ---------------------------------------------------------------------------
// Double-double evaluation context.
//
// The parity-specific sums cancel from O(1) terms down to a scale of order
// sqrt(m~/m); forming them in f64 caps the achievable absolute accuracy near
// 1e-9 for large p and small m. The context below carries the shared series,
// the lattice step, and the normalizers in double-double form so each such
// sum is rounded to f64 exactly once, at the end.
// ---------------------------------------------------------------------------

pub(crate) struct DdCtx {
    pub p: u32,
    pub m: f64,
    m_dd: Dd,
    series: DdSeries,
    /// K(m) / p
    step: Dd,
    dn_lattice: Vec<(Dd, Dd, Dd)>,
}

impl DdCtx {
    pub fn new(p: u32, mp: &ModulusParameter) -> Result<Self> {
        let m = mp.m();
        if !(0.0 < m && m < 1.0) {
            return Err(Error::Domain(format!(
                "double-double lattice context requires m in (0,1), got {m}"
            )));
        }
        // Build the parameter pair in double-double form from whichever field
        // carries the information; near m = 1 that is the complement.
        let (m_dd, mc_dd) = if m >= 0.5 {
            let mc = Dd::from_f64(mp.m_complement());
            (Dd::ONE.sub(mc), mc)
        } else {
            let md = Dd::from_f64(m);
            (md, Dd::ONE.sub(md))
        };
        let series = DdSeries::new(m_dd);
        let step = complete_k_dd(mc_dd).div(Dd::from_f64(p as f64));
        let dn_lattice = (0..p).map(|j| series.eval(step.mul_f64(2.0 * j as f64))).collect();
        Ok(DdCtx { p, m, m_dd, series, step, dn_lattice })
    }

    /// The parameter as a double-double value (consistent with its complement).
    pub fn m_dd(&self) -> Dd {
        self.m_dd
    }

    /// Shift value 2jK/p.
    pub fn shift2(&self, j: u32) -> Dd {
        self.step.mul_f64(2.0 * j as f64)
    }

    /// Shift value 4jK/p.
    pub fn shift4(&self, j: u32) -> Dd {
        self.step.mul_f64(4.0 * j as f64)
    }

    pub fn triple(&self, x: Dd) -> (Dd, Dd, Dd) {
        self.series.eval(x)
    }

    /// alpha = 1 / sum_j dn(2(j-1)K/p).
    pub fn alpha(&self) -> Dd {
        let mut sum = Dd::ZERO;
        for &(_, _, dn) in &self.dn_lattice {
            sum = sum.add(dn);
        }
        sum.recip()
    }

    /// alpha1 = 1 / sum_j cn(4(j-1)K/p).
    pub fn alpha1(&self) -> Dd {
        let mut sum = Dd::ZERO;
        for j in 0..self.p {
            sum = sum.add(self.triple(self.shift4(j)).1);
        }
        sum.recip()
    }

    /// alpha2 = 1 / sum_j (-1)^{j-1} dn(2(j-1)K/p).
    pub fn alpha2(&self) -> Dd {
        let mut sum = Dd::ZERO;
        let mut sign = 1.0;
        for &(_, _, dn) in &self.dn_lattice {
            sum = sum.add(dn.mul_f64(sign));
            sign = -sign;
        }
        sum.recip()
    }

    /// The transformed parameter from the cubic dn lattice sum.
    pub fn m_tilde(&self) -> Dd {
        let alpha = self.alpha();
        let mut dn3 = Dd::ZERO;
        for &(_, _, dn) in &self.dn_lattice {
            dn3 = dn3.add(dn.mul(dn).mul(dn));
        }
        self.m_dd
            .sub(Dd::from_f64(2.0))
            .mul(alpha.sqr())
            .add(alpha.sqr().mul(alpha).mul(dn3).mul_f64(2.0))
    }
}

/// prod_{j=1}^{p-1} sn(2jK/p); the even-p product normalizer.
pub(crate) fn a0_raw(p: u32, mp: &ModulusParameter) -> Result<f64> {
    if mp.m() == 0.0 {
        // Reduces to a product of sines with value p / 2^{p-1}.
        return Ok(p as f64 / 2f64.powi(p as i32 - 1));
    }
    let k = complete_k(mp)?;
    let step = 2.0 * k / p as f64;
    let mut prod = 1.0;
    for j in 1..p {
        prod *= jacobi_real(j as f64 * step, mp)?.sn;
    }
    Ok(prod)
}

/// The transformed parameter from the cubic dn lattice sum; valid for any p.
pub(crate) fn m_tilde_raw(p: u32, mp: &ModulusParameter) -> Result<f64> {
    let m = mp.m();
    if m == 0.0 {
        return Ok(0.0);
    }
    let v = DdCtx::new(p, mp)?.m_tilde().to_f64();
    // The map is non-negative; clamp any last-place residue of the
    // double-double cancellation.
    if v < 0.0 && v > -1e-25 {
        return Ok(0.0);
    }
    Ok(v)
}

/// Compute all applicable constants for one (p, m).
pub fn make_transform_data(p: Order, mp: &ModulusParameter) -> Result<TransformData> {
    if mp.m() == 1.0 {
        return Err(Error::Domain("transforms require m < 1 (K(1) diverges)".into()));
    }
    let pu = p.get();
    let m = mp.m();
    if m == 0.0 {
        let a0 = p.is_even().then(|| pu as f64 / 2f64.powi(pu as i32 - 1));
        return Ok(TransformData {
            p: pu,
            m,
            alpha: 1.0 / pu as f64,
            alpha1: None,
            alpha2: None,
            a0,
            m_tilde: ModulusParameter::new(0.0)?,
        });
    }
    let ctx = DdCtx::new(pu, mp)?;
    let alpha = ctx.alpha().to_f64();
    let mt = ctx.m_tilde().to_f64();
    let m_tilde = ModulusParameter::new(if (-1e-25..0.0).contains(&mt) { 0.0 } else { mt })?;
    let (alpha1, alpha2, a0) = if p.is_odd() {
        (Some(ctx.alpha1().to_f64()), None, None)
    } else {
        (None, Some(ctx.alpha2().to_f64()), Some(a0_raw(pu, mp)?))
    };
    Ok(TransformData { p: pu, m, alpha, alpha1, alpha2, a0, m_tilde })
}

impl TransformData {
    pub(crate) fn alpha1_or_err(&self) -> Result<f64> {
        self.alpha1.ok_or_else(|| {
            Error::Parity(format!(
                "cn/sn sum normalizer requires odd p with m > 0, got p={} m={}",
                self.p, self.m
            ))
        })
    }

    pub(crate) fn alpha2_or_err(&self) -> Result<f64> {
        self.alpha2.ok_or_else(|| {
            Error::Parity(format!(
                "alternating normalizer requires even p with m > 0, got p={} m={}",
                self.p, self.m
            ))
        })
    }

    pub(crate) fn a0_or_err(&self) -> Result<f64> {
        self.a0.ok_or_else(|| {
            Error::Parity(format!("sn product constant requires even p, got p={}", self.p))
        })
    }
}

/// Auxiliary constants of the order-3 and order-4 closed forms:
/// q = dn(2K/3, m) and t = (1-m)^{1/4}.
#[derive(Debug, Clone, Copy)]
pub struct ClosedFormAux {
    pub q: f64,
    pub t: f64,
}

/// Compute the closed-form auxiliaries for one m < 1.
pub fn closed_form_aux(mp: &ModulusParameter) -> Result<ClosedFormAux> {
    let k = complete_k(mp)?;
    let q = jacobi_real(2.0 * k / 3.0, mp)?.dn;
    Ok(ClosedFormAux { q, t: mp.m_complement().powf(0.25) })
}

/// Closed forms of the m -> m~ map for p = 2, 3, 4.
pub fn m_tilde_closed_form(p: Order, mp: &ModulusParameter) -> Result<f64> {
    if mp.m() == 1.0 {
        return Err(Error::Domain("closed forms require m < 1".into()));
    }
    let m = mp.m();
    match p.get() {
        2 => {
            let kp = mp.k_prime();
            Ok(((1.0 - kp) / (1.0 + kp)).powi(2))
        }
        3 => {
            let q = closed_form_aux(mp)?.q;
            Ok(m * (1.0 - q).powi(2) / ((1.0 + q).powi(2) * (1.0 + 2.0 * q).powi(2)))
        }
        4 => {
            let t = mp.m_complement().powf(0.25);
            Ok(((1.0 - t) / (1.0 + t)).powi(4))
        }
        other => Err(Error::UnsupportedOrder(other)),
    }
}

/// Right-hand-side evaluation of the basic sum formulas.
///
/// dn uses the 2K/p lattice for any p; cn and sn use the 4K/p lattice for
/// odd p; for even p the cn formula is the alternating dn sum and the sn
/// formula is the alternating zeta sum (the sn product form remains
/// available through [`landen_sn_even_product`]). The result equals the
/// corresponding Jacobi function at (x, m~).
///
/// The dn sum has only positive terms and is formed in f64; the other four
/// sums cancel down to a scale of order sqrt(m~/m) and are formed in
/// double-double precision. The alternating zeta sum is rearranged through
/// the zeta addition theorem, Z(u+v) = Z(u) + Z(v) - m sn(u) sn(v) sn(u+v),
/// into a pure sn sum; the alternating Z values over the bare lattice cancel
/// pairwise exactly, so the rearrangement is an identity.
pub fn landen_sum(kind: TransformKind, p: Order, mp: &ModulusParameter, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    let m = mp.m();
    if m == 1.0 {
        return Err(Error::Domain("transforms require m < 1 (K(1) diverges)".into()));
    }
    let pu = p.get();

    if kind == TransformKind::Dn {
        let alpha = alpha_raw(pu, mp)?;
        let mut sum = 0.0;
        for &s in &lattice_2k(pu, mp)? {
            sum += jacobi_real(alpha * x + s, mp)?.dn;
        }
        return Ok(alpha * sum);
    }
    if m == 0.0 {
        return Err(Error::Domain(
            "cn/sn sum normalizers diverge at m = 0; evaluate at small m instead".into(),
        ));
    }

    let ctx = DdCtx::new(pu, mp)?;
    let base = ctx.alpha().mul_f64(x);
    match (kind, p.is_odd()) {
        (TransformKind::Cn, true) => {
            let mut sum = Dd::ZERO;
            for j in 0..pu {
                sum = sum.add(ctx.triple(base.add(ctx.shift4(j))).1);
            }
            Ok(ctx.alpha1().mul(sum).to_f64())
        }
        (TransformKind::Sn, true) => {
            let mut sum = Dd::ZERO;
            for j in 0..pu {
                sum = sum.add(ctx.triple(base.add(ctx.shift4(j))).0);
            }
            Ok(ctx.alpha1().mul(sum).to_f64())
        }
        (TransformKind::Cn, false) => {
            let mut sum = Dd::ZERO;
            let mut sign = 1.0;
            for j in 0..pu {
                sum = sum.add(ctx.triple(base.add(ctx.shift2(j))).2.mul_f64(sign));
                sign = -sign;
            }
            Ok(ctx.alpha2().mul(sum).to_f64())
        }
        (TransformKind::Sn, false) => {
            // sum_j (-1)^{j-1} Z(base + s_j) with the addition theorem applied
            // term by term; the pure lattice contributions vanish pairwise.
            let sn_base = ctx.triple(base).0;
            let mut sum = Dd::ZERO;
            let mut sign = 1.0;
            for j in 0..pu {
                let s_j = ctx.shift2(j);
                let sn_shift = ctx.triple(s_j).0;
                let sn_total = ctx.triple(base.add(s_j)).0;
                sum = sum.add(sn_shift.mul(sn_total).mul_f64(sign));
                sign = -sign;
            }
            let zeta_sum = sn_base.mul(sum).mul_f64(-m);
            Ok(ctx.alpha2().mul(zeta_sum).to_f64())
        }
        (TransformKind::Dn, _) => unreachable!("dn handled above"),
    }
}

/// Odd-p product form of the three basic formulas; equals [`landen_sum`].
pub fn landen_product(kind: TransformKind, p: Order, mp: &ModulusParameter, x: f64) -> Result<f64> {
    if p.is_even() {
        return Err(Error::Parity(format!("product forms require odd p, got p={}", p.get())));
    }
    if mp.m() == 1.0 {
        return Err(Error::Domain("product forms require m < 1".into()));
    }
    let td = make_transform_data(p, mp)?;
    let base = td.alpha * x;
    let pu = td.p;
    let k = complete_k(mp)?;
    match kind {
        TransformKind::Dn => {
            let mut num = 1.0;
            for &s in &lattice_2k(pu, mp)? {
                num *= jacobi_real(base + s, mp)?.dn;
            }
            let mut den = 1.0;
            for n in 1..pu {
                den *= jacobi_real(2.0 * n as f64 * k / pu as f64, mp)?.dn;
            }
            Ok(num / den)
        }
        TransformKind::Cn => {
            let mut num = 1.0;
            for &s in &lattice_4k(pu, mp)? {
                num *= jacobi_real(base + s, mp)?.cn;
            }
            let mut den = 1.0;
            for n in 1..pu {
                let v = jacobi_real(4.0 * n as f64 * k / pu as f64, mp)?.cn;
                if v.abs() <= crate::elliptic::POLE_GUARD {
                    return Err(Error::Pole("cn lattice factor within pole guard".into()));
                }
                den *= v;
            }
            Ok(num / den)
        }
        TransformKind::Sn => {
            let mut num = 1.0;
            for &s in &lattice_4k(pu, mp)? {
                num *= jacobi_real(base + s, mp)?.sn;
            }
            let mut den = td.alpha;
            for n in 1..pu {
                let v = jacobi_real(4.0 * n as f64 * k / pu as f64, mp)?.sn;
                if v.abs() <= crate::elliptic::POLE_GUARD {
                    return Err(Error::Pole("sn lattice factor within pole guard".into()));
                }
                den *= v;
            }
            Ok(num / den)
        }
    }
}

/// Even-p sn product form: sn(x, m~) = prod_j sn(x_j, m) / (A0 alpha).
pub fn landen_sn_even_product(p: Order, mp: &ModulusParameter, x: f64) -> Result<f64> {
    if p.is_odd() {
        return Err(Error::Parity(format!("sn product form requires even p, got p={}", p.get())));
    }
    let m = mp.m();
    if m == 0.0 || m == 1.0 {
        return Err(Error::Domain(
            "sn product form requires m in (0,1); the boundary is covered by its limit constants".into(),
        ));
    }
    let td = make_transform_data(p, mp)?;
    let a0 = td.a0_or_err()?;
    let base = td.alpha * x;
    let mut prod = 1.0;
    for &s in &lattice_2k(td.p, mp)? {
        prod *= jacobi_real(base + s, mp)?.sn;
    }
    Ok(prod / (a0 * td.alpha))
}

/// Check K(m~) = K(m) / (p alpha); the periods of both sides of the dn sum.
pub fn verify_period_relation(p: Order, mp: &ModulusParameter) -> Result<ResidualReport> {
    let td = make_transform_data(p, mp)?;
    let k = complete_k(mp)?;
    let k_tilde = complete_k(&td.m_tilde)?;
    let residual = (k_tilde * td.p as f64 * td.alpha - k).abs() / k;
    let mut rep = ResidualReport::new("period-relation", td.p, mp.m(), 1e-10);
    rep.record(0.0, residual);
    Ok(rep)
}

/// Check that the parity-appropriate alternative routes to the transformed
/// parameter coincide with the cubic-sum route.
///
/// Odd p compares against the cn-sum route and m alpha^2/alpha1^2; even p
/// against the alternating-sum route and m^p alpha^4 A0^4.
pub fn verify_m_tilde_equivalence(p: Order, mp: &ModulusParameter) -> Result<ResidualReport> {
    let m = mp.m();
    if !(0.0 < m && m < 1.0) {
        return Err(Error::Domain("equivalence check requires m in (0,1)".into()));
    }
    let td = make_transform_data(p, mp)?;
    let m_tilde = td.m_tilde.m();
    let pu = td.p;
    let mut rep = ResidualReport::new("m-tilde-equivalence", pu, m, 1e-10);

    if p.is_odd() {
        let a1 = td.alpha1_or_err()?;
        // cn-sum route
        let mut cn3 = 0.0;
        for &s in &lattice_4k(pu, mp)? {
            let cn = jacobi_real(s, mp)?.cn;
            cn3 += cn * cn * cn;
        }
        let m1 = m / (a1 * a1 * ((1.0 - 2.0 * m) + 2.0 * m * a1 * cn3));
        // period-rescaling route
        let m3 = m * td.alpha * td.alpha / (a1 * a1);
        rep.record(1.0, (m1 - m_tilde).abs());
        rep.record(3.0, (m3 - m_tilde).abs());
        rep.record(13.0, (m1 - m3).abs());
    } else {
        let a2 = td.alpha2_or_err()?;
        let a0 = td.a0_or_err()?;
        // alternating-sum route
        let mut alt3 = 0.0;
        let mut sign = 1.0;
        for &s in &lattice_2k(pu, mp)? {
            let dn = jacobi_real(s, mp)?.dn;
            alt3 += sign * dn * dn * dn;
            sign = -sign;
        }
        let m2 = 1.0 / (a2 * a2 * ((m - 2.0) + 2.0 * a2 * alt3));
        // product route
        let m4 = m.powi(pu as i32) * td.alpha.powi(4) * a0.powi(4);
        rep.record(2.0, (m2 - m_tilde).abs());
        rep.record(4.0, (m4 - m_tilde).abs());
        rep.record(24.0, (m2 - m4).abs());
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{complete_k, jacobi_real};

    fn mp(m: f64) -> ModulusParameter {
        ModulusParameter::new(m).unwrap()
    }

    fn order(p: u32) -> Order {
        Order::new(p).unwrap()
    }

    // ------------------------------------------------------------------
    // Constants and the modulus map
    // ------------------------------------------------------------------

    #[test]
    fn order_rejects_p_below_two() {
        assert!(Order::new(1).is_err());
        assert!(Order::new(0).is_err());
    }

    #[test]
    fn lattice_points_are_multiples_of_the_step() {
        let p = mp(0.5);
        let k = complete_k(&p).unwrap();
        let lat = ShiftLattice::new(ShiftKind::Real2K, order(4), &p).unwrap();
        assert_eq!(lat.points[0], 0.0);
        for (j, &pt) in lat.points.iter().enumerate() {
            assert!((pt - 2.0 * j as f64 * k / 4.0).abs() < 1e-15);
        }
        let lat4 = ShiftLattice::new(ShiftKind::Real4K, order(3), &p).unwrap();
        assert!((lat4.points[2] - 8.0 * k / 3.0).abs() < 1e-14);
    }

    #[test]
    fn data_at_m_zero() {
        for p in 2..=7 {
            let td = make_transform_data(order(p), &mp(0.0)).unwrap();
            assert_eq!(td.alpha, 1.0 / p as f64);
            assert_eq!(td.m_tilde.m(), 0.0);
        }
    }

    #[test]
    fn data_rejects_m_one() {
        assert!(make_transform_data(order(2), &mp(1.0)).is_err());
    }

    #[test]
    fn alpha_bounds_and_m_tilde_below_m() {
        for p in 2..=7 {
            for i in 1..=9 {
                let m = i as f64 / 10.0;
                let td = make_transform_data(order(p), &mp(m)).unwrap();
                assert!(td.alpha > 1.0 / p as f64 - 1e-15 && td.alpha <= 1.0);
                assert!(td.m_tilde.m() < m, "m~ < m violated at p={p}, m={m}");
            }
        }
    }

    #[test]
    fn m_tilde_reference_values() {
        // Reference grid for the m -> m~ map, 4 significant figures.
        let cases: &[(u32, f64, f64)] = &[
            (2, 0.75, 0.1111),
            (5, 0.5, 2.411e-6),
            (7, 0.99, 1.362e-3),
            (5, 0.9, 8.655e-4),
            (4, 0.75, 8.666e-4),
        ];
        for &(p, m, want) in cases {
            let got = make_transform_data(order(p), &mp(m)).unwrap().m_tilde.m();
            assert!(
                (got - want).abs() <= 0.5001 * 10f64.powf(want.abs().log10().floor() - 3.0),
                "m~(p={p}, m={m}) = {got:e}, reference {want:e}"
            );
        }
    }

    #[test]
    fn closed_forms_match_lattice_sum() {
        for m in [0.1, 0.35, 0.75, 0.9, 0.99] {
            let p = mp(m);
            for pu in 2..=4 {
                let closed = m_tilde_closed_form(order(pu), &p).unwrap();
                let summed = make_transform_data(order(pu), &p).unwrap().m_tilde.m();
                assert!(
                    (closed - summed).abs() < 1e-11,
                    "p={pu}, m={m}: closed {closed:e} vs sum {summed:e}"
                );
            }
        }
    }

    #[test]
    fn closed_form_p2_hand_value() {
        // k' = 0.5 at m = 0.75, so the order-2 map gives (0.5/1.5)^2 = 1/9.
        let v = m_tilde_closed_form(order(2), &mp(0.75)).unwrap();
        assert!((v - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn closed_form_p3_vanishes_at_m_zero() {
        assert!(m_tilde_closed_form(order(3), &mp(0.0)).unwrap().abs() < 1e-14);
    }

    #[test]
    fn closed_form_unsupported_order() {
        assert!(matches!(
            m_tilde_closed_form(order(5), &mp(0.5)),
            Err(Error::UnsupportedOrder(5))
        ));
    }

    #[test]
    fn closed_form_aux_invariants() {
        for m in [0.2, 0.5, 0.8] {
            let p = mp(m);
            let aux = closed_form_aux(&p).unwrap();
            assert!(aux.q > p.k_prime() && aux.q < 1.0);
            assert!(aux.t > 0.0 && aux.t < 1.0);
            // q is a root of q^4 + 2q^3 - 2(1-m)q - (1-m).
            let q = aux.q;
            let res = q.powi(4) + 2.0 * q.powi(3) - 2.0 * (1.0 - m) * q - (1.0 - m);
            assert!(res.abs() < 1e-10, "quartic residual {res:e} at m={m}");
        }
    }

    // ------------------------------------------------------------------
    // Sum formulas
    // ------------------------------------------------------------------

    #[test]
    fn dn_sum_normalized_at_origin() {
        for p in 2..=6 {
            let v = landen_sum(TransformKind::Dn, order(p), &mp(0.6), 0.0).unwrap();
            assert!((v - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn dn_sum_matches_classical_p2_form() {
        // Order 2: dn((1+k')u, m~) = (1 - (1-k') sn^2(u, m)) / dn(u, m).
        let p = mp(0.5);
        let kp = p.k_prime();
        let x = 0.8;
        let u = x / (1.0 + kp);
        let t = jacobi_real(u, &p).unwrap();
        let classical = (1.0 - (1.0 - kp) * t.sn * t.sn) / t.dn;
        let sum = landen_sum(TransformKind::Dn, order(2), &p, x).unwrap();
        assert!((sum - classical).abs() < 1e-13, "{sum} vs {classical}");
    }

    #[test]
    fn sums_match_target_function_for_all_kinds() {
        for p in 2..=7u32 {
            for m in [0.1, 0.5, 0.9] {
                let par = mp(m);
                let td = make_transform_data(order(p), &par).unwrap();
                for i in 0..8 {
                    let x = -2.1 + 4.2 * i as f64 / 7.0;
                    let target = jacobi_real(x, &td.m_tilde).unwrap();
                    for (kind, want) in [
                        (TransformKind::Dn, target.dn),
                        (TransformKind::Cn, target.cn),
                        (TransformKind::Sn, target.sn),
                    ] {
                        let got = landen_sum(kind, order(p), &par, x).unwrap();
                        assert!(
                            (got - want).abs() < 1e-10,
                            "{} sum p={p} m={m} x={x}: {got} vs {want}",
                            kind.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn near_one_parameter_still_accurate() {
        for (p, m, tol) in [(6u32, 0.999, 1e-9), (3, 1.0 - 1e-8, 1e-9)] {
            let par = mp(m);
            let td = make_transform_data(order(p), &par).unwrap();
            for x in [0.4, 1.3] {
                let got = landen_sum(TransformKind::Dn, order(p), &par, x).unwrap();
                let want = jacobi_real(x, &td.m_tilde).unwrap().dn;
                assert!((got - want).abs() < tol, "p={p} m={m} x={x}: {got} vs {want}");
            }
        }
    }

    // ------------------------------------------------------------------
    // Product forms
    // ------------------------------------------------------------------

    #[test]
    fn product_forms_match_sums_for_odd_p() {
        for p in [3u32, 5, 7] {
            for m in [0.2, 0.5, 0.9] {
                let par = mp(m);
                for i in 0..6 {
                    let x = -1.8 + 3.6 * i as f64 / 5.0;
                    for kind in [TransformKind::Dn, TransformKind::Cn, TransformKind::Sn] {
                        let s = landen_sum(kind, order(p), &par, x).unwrap();
                        let pr = landen_product(kind, order(p), &par, x).unwrap();
                        assert!(
                            (s - pr).abs() < 1e-10,
                            "{} p={p} m={m} x={x}: sum {s} vs product {pr}",
                            kind.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_form_rejects_even_p() {
        assert!(matches!(
            landen_product(TransformKind::Dn, order(4), &mp(0.5), 0.3),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn dn_product_trivial_at_origin() {
        let v = landen_product(TransformKind::Dn, order(5), &mp(0.7), 0.0).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sn_even_product_matches_classical_p2_and_zeta_sum() {
        let p = mp(0.5);
        let kp = p.k_prime();
        let x = 0.6;
        let u = x / (1.0 + kp);
        let t = jacobi_real(u, &p).unwrap();
        let classical = (1.0 + kp) * t.sn * t.cn / t.dn;
        let viaprod = landen_sn_even_product(order(2), &p, x).unwrap();
        assert!((viaprod - classical).abs() < 1e-12, "{viaprod} vs {classical}");
        let viazeta = landen_sum(TransformKind::Sn, order(2), &p, x).unwrap();
        assert!((viaprod - viazeta).abs() < 1e-11);
    }

    #[test]
    fn sn_even_product_vanishes_at_origin() {
        assert!(landen_sn_even_product(order(4), &mp(0.5), 0.0).unwrap().abs() < 1e-14);
    }

    #[test]
    fn a0_limit_constant_at_m_zero() {
        for p in [2u32, 4, 6] {
            let td = make_transform_data(order(p), &mp(0.0)).unwrap();
            assert_eq!(td.a0.unwrap(), p as f64 / 2f64.powi(p as i32 - 1));
        }
    }

    #[test]
    fn zeta_sum_and_product_forms_agree_for_even_p() {
        for p in [2u32, 4, 6] {
            for m in [0.3, 0.7] {
                let par = mp(m);
                for x in [0.35, 1.2] {
                    let a = landen_sum(TransformKind::Sn, order(p), &par, x).unwrap();
                    let b = landen_sn_even_product(order(p), &par, x).unwrap();
                    assert!((a - b).abs() < 1e-10, "p={p} m={m} x={x}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn even_sn_lattice_product_identity() {
        // m^{p/2} alpha alpha2 prod_{j=1}^{p-1} sn(2jK/p) = prod_{n=1}^{p/2-1} ns^2(2nK/p)
        for p in [2u32, 4, 6] {
            for m in [0.3, 0.6, 0.9] {
                let par = mp(m);
                let td = make_transform_data(order(p), &par).unwrap();
                let k = complete_k(&par).unwrap();
                let lhs = m.powf(p as f64 / 2.0) * td.alpha * td.alpha2.unwrap() * td.a0.unwrap();
                let mut rhs = 1.0;
                for n in 1..p / 2 {
                    let sn = jacobi_real(2.0 * n as f64 * k / p as f64, &par).unwrap().sn;
                    rhs /= sn * sn;
                }
                assert!((lhs - rhs).abs() < 1e-9, "p={p} m={m}: {lhs} vs {rhs}");
            }
        }
    }

    // ------------------------------------------------------------------
    // Period relation and equivalence of the modulus routes
    // ------------------------------------------------------------------

    #[test]
    fn period_relation_holds() {
        for p in 2..=7 {
            for m in [0.1, 0.5, 0.9] {
                let rep = verify_period_relation(order(p), &mp(m)).unwrap();
                assert!(rep.passed, "p={p} m={m}: residual {}", rep.max_residual);
            }
        }
        // Looser check near m = 1.
        let rep = verify_period_relation(order(6), &mp(0.999)).unwrap();
        assert!(rep.max_residual < 1e-9);
    }

    #[test]
    fn m_tilde_routes_coincide() {
        for p in 2..=7 {
            for m in [0.15, 0.5, 0.85] {
                let rep = verify_m_tilde_equivalence(order(p), &mp(m)).unwrap();
                assert!(rep.passed, "p={p} m={m}: max residual {:e}", rep.max_residual);
            }
        }
    }

    #[test]
    fn m_tilde_equivalence_at_reference_point() {
        let rep = verify_m_tilde_equivalence(order(7), &mp(0.99)).unwrap();
        assert!(rep.passed);
        let td = make_transform_data(order(7), &mp(0.99)).unwrap();
        assert!((td.m_tilde.m() - 1.362e-3).abs() < 5e-7);
    }

    #[test]
    fn m_tilde_monotonic_in_m_and_p() {
        for p in 2..=7u32 {
            let mut prev = -1.0;
            for i in 1..=19 {
                let m = 0.05 * i as f64;
                let v = make_transform_data(order(p), &mp(m)).unwrap().m_tilde.m();
                assert!(v > prev, "m~ not increasing at p={p}, m={m}");
                prev = v;
            }
        }
        for i in 1..=19 {
            let m = 0.05 * i as f64;
            let mut prev = f64::INFINITY;
            for p in 2..=7u32 {
                let v = make_transform_data(order(p), &mp(m)).unwrap().m_tilde.m();
                assert!(v < prev, "m~ not decreasing in p at m={m}, p={p}");
                prev = v;
            }
        }
    }

    // ------------------------------------------------------------------
    // Trigonometric limits
    // ------------------------------------------------------------------

    #[test]
    fn trigonometric_limits_at_tiny_m() {
        let par = mp(1e-12);
        let k = complete_k(&par).unwrap();
        for x in [0.3, 0.9] {
            for p in [2u32, 4, 6] {
                // sin(px) = 2^{p-1} prod_j sin(x + (j-1)pi/p)
                let mut prod = 1.0;
                for j in 0..p {
                    prod *= jacobi_real(x + 2.0 * j as f64 * k / p as f64, &par).unwrap().sn;
                }
                let lhs = 2f64.powi(p as i32 - 1) * prod;
                assert!((lhs - (p as f64 * x).sin()).abs() < 1e-8, "even p={p} x={x}");
            }
            for p in [3u32, 5, 7] {
                // cos(px) = 2^{p-1} prod_j cos(x + 2(j-1)pi/p)
                let mut prod_c = 1.0;
                let mut prod_s = 1.0;
                for j in 0..p {
                    let t = jacobi_real(x + 4.0 * j as f64 * k / p as f64, &par).unwrap();
                    prod_c *= t.cn;
                    prod_s *= t.sn;
                }
                let lhs_c = 2f64.powi(p as i32 - 1) * prod_c;
                assert!((lhs_c - (p as f64 * x).cos()).abs() < 1e-8, "odd-cos p={p} x={x}");
                // sin(px) = (-4)^{(p-1)/2} prod_j sin(x + 2(j-1)pi/p)
                let lhs_s = (-4f64).powi(((p - 1) / 2) as i32) * prod_s;
                assert!((lhs_s - (p as f64 * x).sin()).abs() < 1e-8, "odd-sin p={p} x={x}");
            }
        }
    }
}
