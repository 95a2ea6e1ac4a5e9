//! Transformations for products and powers of the basic functions, the zeta
//! and complete-E transforms, the lattice pair sums, and the consistency
//! conditions that tie the normalizers together.
//!
//! The pair sums A_d, A_s, A_c are x-independent: the dn pairs walk the
//! 2K/p lattice, the sn and cn pairs the 4K/p lattice (where both functions
//! are genuinely periodic across the p steps). The cancellation-prone sums
//! are formed in double-double precision, like the basic sum formulas.

use crate::dd::Dd;
use crate::elliptic::{complete_e, complete_k, jacobi_minor, jacobi_real, jacobi_zeta, MinorKind};
use crate::error::{Error, Result};
use crate::landen::{lattice_2k, lattice_4k, make_transform_data, DdCtx, Order, TransformKind};
use crate::modulus::ModulusParameter;
use crate::report::ResidualReport;

/// The x-independent lattice pair sums. `a_s` and `a_c` carry the m factor
/// of their definitions and exist for odd p only.
#[derive(Debug, Clone)]
pub struct LatticeSums {
    pub p: u32,
    pub m: f64,
    pub a_d: f64,
    pub a_s: Option<f64>,
    pub a_c: Option<f64>,
}

/// Closed-form evaluation of the pair sums.
pub fn lattice_sums(p: Order, mp: &ModulusParameter) -> Result<LatticeSums> {
    let m = mp.m();
    if !(0.0 < m && m < 1.0) {
        return Err(Error::Domain("lattice sums require m in (0,1)".into()));
    }
    let pu = p.get();
    let k = complete_k(mp)?;
    let pf = pu as f64;

    let half_terms = |top: u32, step: f64| -> Result<f64> {
        let mut acc = 0.0;
        for j in 1..=top {
            let u = step * j as f64 * k / pf;
            let t = jacobi_real(u, mp)?;
            let z = jacobi_zeta(u, mp)?;
            acc += t.dn - t.cn / t.sn * z;
        }
        Ok(acc)
    };

    let a_d = if p.is_odd() {
        pf * half_terms((pu - 1) / 2, 2.0)?
    } else {
        pf / 2.0 * mp.k_prime() + pf * half_terms((pu - 2) / 2, 2.0)?
    };

    let (a_s, a_c) = if p.is_odd() {
        let mut s = 0.0;
        let mut c = 0.0;
        for j in 1..=(pu - 1) / 2 {
            let u = 4.0 * j as f64 * k / pf;
            let t = jacobi_real(u, mp)?;
            let z = jacobi_zeta(u, mp)?;
            s += z / t.sn;
            c += m * t.cn - t.dn * z / t.sn;
        }
        (Some(pf * s), Some(pf * c))
    } else {
        (None, None)
    };

    Ok(LatticeSums { p: pu, m, a_d, a_s, a_c })
}

/// Direct double-sum evaluation of a pair sum at one x; the cross-check for
/// the closed forms. dn pairs use the 2K/p lattice; sn and cn pairs use the
/// 4K/p lattice and carry the m factor.
pub fn pair_sum_direct(
    kind: TransformKind,
    p: Order,
    mp: &ModulusParameter,
    x: f64,
) -> Result<f64> {
    let td = make_transform_data(p, mp)?;
    let shifts = match kind {
        TransformKind::Dn => lattice_2k(td.p, mp)?,
        _ => lattice_4k(td.p, mp)?,
    };
    let vals: Vec<f64> = shifts
        .iter()
        .map(|&s| {
            let t = jacobi_real(td.alpha * x + s, mp)?;
            Ok(match kind {
                TransformKind::Dn => t.dn,
                TransformKind::Cn => t.cn,
                TransformKind::Sn => t.sn,
            })
        })
        .collect::<Result<_>>()?;
    let mut sum = 0.0;
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            sum += vals[i] * vals[j];
        }
    }
    Ok(match kind {
        TransformKind::Dn => sum,
        _ => mp.m() * sum,
    })
}

/// Which product/power combination a transform targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    SnCn,
    SnDn,
    CnDn,
    Dn2,
    SnCnDn,
    Dn3,
    Cn3,
    Sn3,
}

impl ProductKind {
    pub const ALL: [ProductKind; 8] = [
        ProductKind::SnCn,
        ProductKind::SnDn,
        ProductKind::CnDn,
        ProductKind::Dn2,
        ProductKind::SnCnDn,
        ProductKind::Dn3,
        ProductKind::Cn3,
        ProductKind::Sn3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::SnCn => "sn-cn",
            ProductKind::SnDn => "sn-dn",
            ProductKind::CnDn => "cn-dn",
            ProductKind::Dn2 => "dn2",
            ProductKind::SnCnDn => "sn-cn-dn",
            ProductKind::Dn3 => "dn3",
            ProductKind::Cn3 => "cn3",
            ProductKind::Sn3 => "sn3",
        }
    }

    /// The target value this transform should reproduce at (x, m~).
    pub fn target(self, x: f64, m_tilde: &ModulusParameter) -> Result<f64> {
        let t = jacobi_real(x, m_tilde)?;
        Ok(match self {
            ProductKind::SnCn => t.sn * t.cn,
            ProductKind::SnDn => t.sn * t.dn,
            ProductKind::CnDn => t.cn * t.dn,
            ProductKind::Dn2 => t.dn * t.dn,
            ProductKind::SnCnDn => t.sn * t.cn * t.dn,
            ProductKind::Dn3 => t.dn * t.dn * t.dn,
            ProductKind::Cn3 => t.cn * t.cn * t.cn,
            ProductKind::Sn3 => t.sn * t.sn * t.sn,
        })
    }
}

// Double-double lattice sum of a per-point monomial.
fn dd_sum<F>(ctx: &DdCtx, x: f64, four_k: bool, alternating: bool, f: F) -> Dd
where
    F: Fn(&(Dd, Dd, Dd)) -> Dd,
{
    let base = ctx.alpha().mul_f64(x);
    let mut sum = Dd::ZERO;
    let mut sign = 1.0;
    for j in 0..ctx.p {
        let s = if four_k { ctx.shift4(j) } else { ctx.shift2(j) };
        let t = ctx.triple(base.add(s));
        sum = sum.add(f(&t).mul_f64(sign));
        if alternating {
            sign = -sign;
        }
    }
    sum
}

// Alternating zeta sum over the 2K/p lattice, rearranged through the zeta
// addition theorem into a pure sn sum (see `landen_sum`).
fn dd_alt_zeta_sum(ctx: &DdCtx, x: f64) -> Dd {
    let base = ctx.alpha().mul_f64(x);
    let sn_base = ctx.triple(base).0;
    let mut sum = Dd::ZERO;
    let mut sign = 1.0;
    for j in 0..ctx.p {
        let s_j = ctx.shift2(j);
        let sn_shift = ctx.triple(s_j).0;
        let sn_total = ctx.triple(base.add(s_j)).0;
        sum = sum.add(sn_shift.mul(sn_total).mul_f64(sign));
        sign = -sign;
    }
    sn_base.mul(sum).mul_f64(-ctx.m)
}

/// Evaluate the product/power transform; equals the matching product of
/// Jacobi functions at (x, m~).
pub fn product_transform(
    kind: ProductKind,
    p: Order,
    mp: &ModulusParameter,
    x: f64,
) -> Result<f64> {
    let m = mp.m();
    if !(0.0 < m && m < 1.0) {
        return Err(Error::Domain("product transforms require m in (0,1)".into()));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    let pu = p.get();
    let ctx = DdCtx::new(pu, mp)?;
    let alpha = ctx.alpha();
    let m_tilde = ctx.m_tilde();
    let odd = p.is_odd();

    let value = match (kind, odd) {
        (ProductKind::SnCn, _) => {
            // coefficient m alpha^2 / m~
            let coeff = alpha.sqr().mul_f64(m).div(m_tilde);
            coeff.mul(dd_sum(&ctx, x, false, false, |t| t.0.mul(t.1)))
        }
        (ProductKind::SnDn, true) => ctx
            .alpha1()
            .mul(alpha)
            .mul(dd_sum(&ctx, x, true, false, |t| t.0.mul(t.2))),
        (ProductKind::SnDn, false) => ctx
            .alpha2()
            .mul(alpha)
            .mul_f64(m)
            .mul(dd_sum(&ctx, x, false, true, |t| t.0.mul(t.1))),
        (ProductKind::CnDn, true) => ctx
            .alpha1()
            .mul(alpha)
            .mul(dd_sum(&ctx, x, true, false, |t| t.1.mul(t.2))),
        (ProductKind::CnDn, false) => ctx
            .alpha2()
            .mul(alpha)
            .mul(dd_sum(&ctx, x, false, true, |t| t.2.sqr())),
        (ProductKind::Dn2, _) => {
            let sums = lattice_sums(p, mp)?;
            let mut dn2 = 0.0;
            let a = alpha.to_f64();
            for &s in &lattice_2k(pu, mp)? {
                let dn = jacobi_real(a * x + s, mp)?.dn;
                dn2 += dn * dn;
            }
            return Ok(a * a * (dn2 + 2.0 * sums.a_d));
        }
        (ProductKind::SnCnDn, _) => {
            // coefficient m alpha^3 / m~
            let coeff = alpha.sqr().mul(alpha).mul_f64(m).div(m_tilde);
            coeff.mul(dd_sum(&ctx, x, false, false, |t| t.0.mul(t.1).mul(t.2)))
        }
        (ProductKind::Dn3, _) => {
            // alpha^3 sum dn^3 + (alpha/2)[2 - m~ - (2-m) alpha^2] sum dn
            let s3 = dd_sum(&ctx, x, false, false, |t| t.2.sqr().mul(t.2));
            let s1 = dd_sum(&ctx, x, false, false, |t| t.2);
            let c = Dd::from_f64(2.0)
                .sub(m_tilde)
                .sub(alpha.sqr().mul(Dd::from_f64(2.0).sub(ctx.m_dd())))
                .mul(alpha)
                .mul_f64(0.5);
            alpha.sqr().mul(alpha).mul(s3).add(c.mul(s1))
        }
        (ProductKind::Cn3, true) => {
            let a1 = ctx.alpha1();
            let s3 = dd_sum(&ctx, x, true, false, |t| t.1.sqr().mul(t.1));
            let s1 = dd_sum(&ctx, x, true, false, |t| t.1);
            // (1 - alpha1^2)/alpha1^2 - (1 - alpha^2)/(2 m alpha^2)
            let c = Dd::ONE
                .sub(a1.sqr())
                .div(a1.sqr())
                .sub(Dd::ONE.sub(alpha.sqr()).div(alpha.sqr().mul_f64(2.0 * m)));
            a1.sqr().mul(a1).mul(s3.add(c.mul(s1)))
        }
        (ProductKind::Cn3, false) => {
            let a2 = ctx.alpha2();
            let s3 = dd_sum(&ctx, x, false, true, |t| t.2.sqr().mul(t.2));
            let s1 = dd_sum(&ctx, x, false, true, |t| t.2);
            // (2 alpha^2 - alpha2^2)/(2 alpha^2 alpha2^2) + (m-2)/2
            let c = alpha
                .sqr()
                .mul_f64(2.0)
                .sub(a2.sqr())
                .div(alpha.sqr().mul(a2.sqr()).mul_f64(2.0))
                .add(ctx.m_dd().sub(Dd::from_f64(2.0)).mul_f64(0.5));
            a2.sqr().mul(a2).mul(s3.add(c.mul(s1)))
        }
        (ProductKind::Sn3, true) => {
            let a1 = ctx.alpha1();
            let s3 = dd_sum(&ctx, x, true, false, |t| t.0.sqr().mul(t.0));
            let s1 = dd_sum(&ctx, x, true, false, |t| t.0);
            // (1 - alpha^2)/(2 m alpha^2) + (1 - alpha1^2)/(2 alpha1^2)
            let c = Dd::ONE
                .sub(alpha.sqr())
                .div(alpha.sqr().mul_f64(2.0 * m))
                .add(Dd::ONE.sub(a1.sqr()).div(a1.sqr().mul_f64(2.0)));
            a1.sqr().mul(a1).mul(s3.add(c.mul(s1)))
        }
        (ProductKind::Sn3, false) => {
            let a2 = ctx.alpha2();
            let zeta_sum = dd_alt_zeta_sum(&ctx, x);
            let scd = dd_sum(&ctx, x, false, true, |t| t.0.mul(t.1).mul(t.2));
            // alpha2 (alpha^2 + alpha2^2)/(2 alpha^2) * altZ - m alpha2^3 * altSnCnDn
            let c1 = a2.mul(alpha.sqr().add(a2.sqr())).div(alpha.sqr().mul_f64(2.0));
            c1.mul(zeta_sum).sub(a2.sqr().mul(a2).mul_f64(m).mul(scd))
        }
    };
    Ok(value.to_f64())
}

/// Zeta transform: Z(x, m~) = alpha sum_j Z(x_j, m).
pub fn zeta_transform(p: Order, mp: &ModulusParameter, x: f64) -> Result<f64> {
    let m = mp.m();
    if !(0.0 < m && m < 1.0) {
        return Err(Error::Domain("zeta transform requires m in (0,1)".into()));
    }
    let td = make_transform_data(p, mp)?;
    let mut sum = 0.0;
    for &s in &lattice_2k(td.p, mp)? {
        sum += jacobi_zeta(td.alpha * x + s, mp)?;
    }
    Ok(td.alpha * sum)
}

/// Complete-E transform: E(m~) = alpha [E(m) + 2 A_d K(m)/p].
pub fn e_transform(p: Order, mp: &ModulusParameter) -> Result<f64> {
    let m = mp.m();
    if !(0.0 < m && m < 1.0) {
        return Err(Error::Domain("E transform requires m in (0,1)".into()));
    }
    let td = make_transform_data(p, mp)?;
    let sums = lattice_sums(p, mp)?;
    let k = complete_k(mp)?;
    let e = complete_e(mp)?;
    Ok(td.alpha * (e + 2.0 * sums.a_d * k / td.p as f64))
}

/// The even-p identities that interlock the alternating sums, plus the two
/// x-independent normalizer rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConsistencyId {
    /// [sum dn][alt-sum dn] = alt-sum dn^2.
    AltDnFactorization,
    /// m alt-sum sn*cn = [alt-sum Z][sum dn].
    AltSnCnZetaDn,
    /// m sum sn*cn = [alt-sum Z][alt-sum dn].
    SnCnZetaAltDn,
    /// 1/alpha^2 = sum dn^2 + 2 A_d + [alt-sum Z]^2, x-independent.
    AlphaSumRule,
    /// 1/alpha2^2 = [alt-sum dn]^2 + [alt-sum Z]^2, x-independent.
    Alpha2SumRule,
}

impl ConsistencyId {
    pub const ALL: [ConsistencyId; 5] = [
        ConsistencyId::AltDnFactorization,
        ConsistencyId::AltSnCnZetaDn,
        ConsistencyId::SnCnZetaAltDn,
        ConsistencyId::AlphaSumRule,
        ConsistencyId::Alpha2SumRule,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConsistencyId::AltDnFactorization => "alt-dn-factorization",
            ConsistencyId::AltSnCnZetaDn => "alt-sncn-zeta-dn",
            ConsistencyId::SnCnZetaAltDn => "sncn-zeta-altdn",
            ConsistencyId::AlphaSumRule => "alpha-sum-rule",
            ConsistencyId::Alpha2SumRule => "alpha2-sum-rule",
        }
    }
}

/// Check one even-p identity at one (p, m, x).
///
/// For `AlphaSumRule` the report's note states which reading of its first
/// term (the full lattice sum of dn^2 versus its first term alone) is
/// x-independent; the residual refers to the full-sum reading.
pub fn verify_remarkable_identity(
    id: ConsistencyId,
    p: Order,
    mp: &ModulusParameter,
    x: f64,
) -> Result<ResidualReport> {
    if p.is_odd() {
        return Err(Error::Parity(format!(
            "{} requires even p, got p={}",
            id.name(),
            p.get()
        )));
    }
    let m = mp.m();
    if !(0.0 < m && m < 1.0) {
        return Err(Error::Domain("identity checks require m in (0,1)".into()));
    }
    let td = make_transform_data(p, mp)?;
    let alpha2 = td.alpha2_or_err()?;
    let shifts = lattice_2k(td.p, mp)?;
    let mut dn_sum = 0.0;
    let mut alt_dn = 0.0;
    let mut alt_dn2 = 0.0;
    let mut alt_z = 0.0;
    let mut alt_sncn = 0.0;
    let mut sncn = 0.0;
    let mut dn2_sum = 0.0;
    let mut sign = 1.0;
    for &s in &shifts {
        let u = td.alpha * x + s;
        let t = jacobi_real(u, mp)?;
        let z = jacobi_zeta(u, mp)?;
        dn_sum += t.dn;
        alt_dn += sign * t.dn;
        alt_dn2 += sign * t.dn * t.dn;
        alt_z += sign * z;
        alt_sncn += sign * t.sn * t.cn;
        sncn += t.sn * t.cn;
        dn2_sum += t.dn * t.dn;
        sign = -sign;
    }
    let sums = lattice_sums(p, mp)?;

    let mut rep = ResidualReport::new(id.name(), td.p, m, 1e-9).with_r(0);
    match id {
        ConsistencyId::AltDnFactorization => {
            rep.record(x, (dn_sum * alt_dn - alt_dn2).abs());
        }
        ConsistencyId::AltSnCnZetaDn => {
            rep.record(x, (m * alt_sncn - alt_z * dn_sum).abs());
        }
        ConsistencyId::SnCnZetaAltDn => {
            rep.record(x, (m * sncn - alt_z * alt_dn).abs());
        }
        ConsistencyId::AlphaSumRule => {
            let lhs = 1.0 / (td.alpha * td.alpha);
            rep.record(x, (dn2_sum + 2.0 * sums.a_d + alt_z * alt_z - lhs).abs());
            let single = jacobi_real(td.alpha * x, mp)?.dn.powi(2);
            let single_res = (single + 2.0 * sums.a_d + alt_z * alt_z - lhs).abs();
            rep.note = Some(format!(
                "full-sum reading residual {:.2e}; first-term reading residual {:.2e} (x-dependent)",
                rep.max_residual, single_res
            ));
        }
        ConsistencyId::Alpha2SumRule => {
            let lhs = 1.0 / (alpha2 * alpha2);
            rep.record(x, (alt_dn * alt_dn + alt_z * alt_z - lhs).abs());
        }
    }
    Ok(rep)
}

/// The two x-independent odd-p rules:
/// 1/alpha^2 = p + 2(A_d + A_s) and m/alpha1^2 = mp + 2(A_s + A_c).
pub fn verify_normalizer_sum_rules(p: Order, mp: &ModulusParameter) -> Result<ResidualReport> {
    if p.is_even() {
        return Err(Error::Parity(format!(
            "normalizer sum rules as stated require odd p, got p={}",
            p.get()
        )));
    }
    let m = mp.m();
    let td = make_transform_data(p, mp)?;
    let alpha1 = td.alpha1_or_err()?;
    let sums = lattice_sums(p, mp)?;
    let (a_s, a_c) = (sums.a_s.unwrap(), sums.a_c.unwrap());
    let pf = td.p as f64;
    let mut rep = ResidualReport::new("normalizer-sum-rules", td.p, m, 1e-9);
    rep.record(1.0, (1.0 / (td.alpha * td.alpha) - pf - 2.0 * (sums.a_d + a_s)).abs());
    rep.record(2.0, (m / (alpha1 * alpha1) - m * pf - 2.0 * (a_s + a_c)).abs());
    Ok(rep)
}

/// Check that cs, ds, ns (and friends) agree with the pair-sum machinery:
/// exposed mainly so the CLI verify suite can route through one helper.
pub fn minor_at_shift(kind: MinorKind, shift: f64, mp: &ModulusParameter) -> Result<f64> {
    jacobi_minor(kind, shift, mp)
}
