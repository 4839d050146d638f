//! Closed-form upper bounds on the Zarankiewicz number z(m,n,s,t), the
//! matching spectral-radius and edge-count bounds for K_{s,t}-free graphs,
//! optimal-k selection, and an empirical scan of the regions where each k
//! gives the strictly best bound.
//!
//! All bounds are evaluated in double precision with fractional powers via
//! exp/log (`f64::powf`). Values are real-valued upper bounds and are never
//! rounded down to integers here; flooring is a caller's choice.

use crate::error::{Error, Result};

/// Relative tolerance used when comparing bound values from different
/// families (and for tie detection in [`best_k`]).
pub const BOUND_REL_TOL: f64 = 1e-9;

/// A Zarankiewicz problem instance: (0,1) matrices of size `m x n` with no
/// all-ones `s x t` submatrix (`s` counts rows, `t` counts columns).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZInstance {
    pub m: u64,
    pub n: u64,
    pub s: u32,
    pub t: u32,
}

impl ZInstance {
    pub fn new(m: u64, n: u64, s: u32, t: u32) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::Domain(format!(
                "instance sizes must be positive, got m={m}, n={n}"
            )));
        }
        if s < 2 || t < 2 {
            return Err(Error::Domain(format!(
                "forbidden submatrix sides must be at least 2, got s={s}, t={t}"
            )));
        }
        Ok(ZInstance { m, n, s, t })
    }

    /// The equivalent instance with the roles of rows and columns swapped:
    /// z(m,n,s,t) = z(n,m,t,s).
    pub fn transpose(self) -> Self {
        ZInstance { m: self.n, n: self.m, s: self.t, t: self.s }
    }

    /// True when `s > m` or `t > n`. The all-ones matrix is then free and
    /// z = m*n trivially; the bound formulas still evaluate as written and
    /// remain valid, so this is an advisory flag, not an error.
    pub fn trivially_saturated(self) -> bool {
        u64::from(self.s) > self.m || u64::from(self.t) > self.n
    }
}

/// Bound family for the matrix Zarankiewicz problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    Kst,
    Furedi,
    GenericK,
    BabaiGuiduliMain,
}

impl BoundFamily {
    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::Kst => "kst",
            BoundFamily::Furedi => "furedi",
            BoundFamily::GenericK => "generic",
            BoundFamily::BabaiGuiduliMain => "babai_guiduli_main",
        }
    }
}

/// An evaluated bound: which family, the `k` parameter when the family has
/// one, and the double-precision value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub family: BoundFamily,
    pub k: Option<u32>,
    pub value: f64,
}

/// Bound family for K_{s,t}-free graphs (spectral radius and edge count).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralFamily {
    /// mu <= 1/2 + sqrt((s-1)(n-1) + 1/4), the t = 2 case.
    In0,
    /// mu <= (s-t+1)^{1/t} n^{1-1/t} + (t-1) n^{1-2/t} + t-2, the t >= 3 case.
    In1,
    /// The general-k spectral bound, of which In1 is the k = t-2 member.
    GenericSpectralK,
    /// e(G) <= n * In1 / 2.
    EdgeBoundIn2,
}

impl SpectralFamily {
    pub fn name(self) -> &'static str {
        match self {
            SpectralFamily::In0 => "in0",
            SpectralFamily::In1 => "in1",
            SpectralFamily::GenericSpectralK => "generic_spectral",
            SpectralFamily::EdgeBoundIn2 => "edge_in2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralBoundReport {
    pub family: SpectralFamily,
    pub k: Option<u32>,
    pub value: f64,
}

/// The generic bound family: for 0 <= k <= s-2,
///
/// z(m,n,s,t) <= (s-k-1)^{1/t} * n * m^{1-1/t} + (t-1) * m^{1+k/t} + k*n.
///
/// k = 0 recovers [`kst_bound`] (identical evaluation path, so the values
/// agree bit for bit); k = t-2 (for s >= t) strictly improves on
/// [`furedi_bound`].
pub fn generic_bound(inst: &ZInstance, k: u32) -> Result<f64> {
    if k + 2 > inst.s {
        return Err(Error::Domain(format!(
            "k must lie in [0, s-2] = [0, {}], got k={k}",
            inst.s - 2
        )));
    }
    let m = inst.m as f64;
    let n = inst.n as f64;
    let s = f64::from(inst.s);
    let t = f64::from(inst.t);
    let kf = f64::from(k);
    Ok((s - kf - 1.0).powf(1.0 / t) * n * m.powf(1.0 - 1.0 / t)
        + (t - 1.0) * m.powf(1.0 + kf / t)
        + kf * n)
}

/// The Kővári–Sós–Turán bound (s-1)^{1/t} n m^{1-1/t} + (t-1) m, i.e. the
/// k = 0 member of [`generic_bound`].
pub fn kst_bound(inst: &ZInstance) -> f64 {
    // k = 0 is always admissible since s >= 2.
    generic_bound(inst, 0).expect("k = 0 is admissible for every valid instance")
}

/// Füredi's bound (s-t+1)^{1/t} n m^{1-1/t} + t m^{2-2/t} + t n, stated for
/// s >= t.
pub fn furedi_bound(inst: &ZInstance) -> Result<f64> {
    if inst.s < inst.t {
        return Err(Error::Domain(format!(
            "this bound requires s >= t, got s={}, t={}",
            inst.s, inst.t
        )));
    }
    let m = inst.m as f64;
    let n = inst.n as f64;
    let s = f64::from(inst.s);
    let t = f64::from(inst.t);
    Ok((s - t + 1.0).powf(1.0 / t) * n * m.powf(1.0 - 1.0 / t)
        + t * m.powf(2.0 - 2.0 / t)
        + t * n)
}

/// The k in [0, s-2] minimizing [`generic_bound`], together with the
/// minimal value. Ties (within [`BOUND_REL_TOL`] relative) break toward the
/// smaller k, which has the simpler formula.
pub fn best_k(inst: &ZInstance) -> (u32, f64) {
    let mut best = (0u32, kst_bound(inst));
    for k in 1..=inst.s - 2 {
        let value = generic_bound(inst, k).expect("k in range");
        if value < best.1 - BOUND_REL_TOL * best.1.abs() {
            best = (k, value);
        }
    }
    best
}

/// Spectral-radius bound for K_{s,2}-free graphs of order n:
/// mu <= 1/2 + sqrt((s-1)(n-1) + 1/4).
pub fn spectral_bound_t2(n: u64, s: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("order n must be positive".into()));
    }
    if s < 2 {
        return Err(Error::Domain(format!("s must be at least 2, got {s}")));
    }
    let n = n as f64;
    let s = f64::from(s);
    Ok(0.5 + ((s - 1.0) * (n - 1.0) + 0.25).sqrt())
}

/// General-k spectral-radius bound for K_{s,t}-free graphs, s,t >= 3 and
/// 0 <= k <= min(s,t)-2:
///
/// mu <= (s-k-1)^{1/t} n^{1-1/t} + (t-1) n^{k/t} + k.
///
/// At k = t-2 (with s >= t) this is the published t >= 3 bound.
pub fn spectral_bound_generic(n: u64, s: u32, t: u32, k: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("order n must be positive".into()));
    }
    if s < 3 || t < 3 {
        return Err(Error::Domain(format!(
            "the general spectral bound requires s,t >= 3, got s={s}, t={t}"
        )));
    }
    let cap = s.min(t) - 2;
    if k > cap {
        return Err(Error::Domain(format!(
            "k must lie in [0, min(s,t)-2] = [0, {cap}], got k={k}"
        )));
    }
    let n = n as f64;
    let s = f64::from(s);
    let t = f64::from(t);
    let kf = f64::from(k);
    Ok((s - kf - 1.0).powf(1.0 / t) * n.powf(1.0 - 1.0 / t)
        + (t - 1.0) * n.powf(kf / t)
        + kf)
}

/// Edge-count bound for K_{s,t}-free graphs, s >= t >= 3:
///
/// e(G) <= (1/2)(s-t+1)^{1/t} n^{2-1/t} + (1/2)(t-1) n^{2-2/t} + (1/2)(t-2) n,
///
/// which equals n * spectral_bound_generic(n,s,t,t-2) / 2. This function
/// evaluates the closed form directly; the identity with the spectral route
/// is kept as a cross-check in tests rather than collapsed here.
pub fn edge_bound(n: u64, s: u32, t: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("order n must be positive".into()));
    }
    if t < 3 || s < t {
        return Err(Error::Domain(format!(
            "the edge bound requires s >= t >= 3, got s={s}, t={t}"
        )));
    }
    let n = n as f64;
    let s = f64::from(s);
    let t = f64::from(t);
    Ok(0.5 * (s - t + 1.0).powf(1.0 / t) * n.powf(2.0 - 1.0 / t)
        + 0.5 * (t - 1.0) * n.powf(2.0 - 2.0 / t)
        + 0.5 * (t - 2.0) * n)
}

/// Main term (s-1)^{1/t} n^{1-1/t} of the Babai–Guiduli spectral bound.
/// The o(1) correction in the published bound has no closed form and is
/// deliberately omitted; this is a comparison baseline only.
pub fn babai_guiduli_main_term(n: u64, s: u32, t: u32) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("order n must be positive".into()));
    }
    if t < 2 || s < t {
        return Err(Error::Domain(format!(
            "the Babai-Guiduli term requires s >= t >= 2, got s={s}, t={t}"
        )));
    }
    let n = n as f64;
    let s = f64::from(s);
    let t = f64::from(t);
    Ok((s - 1.0).powf(1.0 / t) * n.powf(1.0 - 1.0 / t))
}

/// One scanned point of a dominance scan: at (m, n), `winner` is the
/// argmin over admissible i of generic_bound(m,n,s,t,i) with ties broken
/// toward smaller i; `strict` records whether the winner beat every other i
/// by more than [`BOUND_REL_TOL`] relative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub m: u64,
    pub n: u64,
    pub winner: u32,
    pub strict: bool,
}

/// Per-m summary of where the scanned k strictly wins. `a_emp` and `b_emp`
/// are the empirical analogues of the proposition's window constants:
/// n_lo / m^{(k+1)/t} and n_hi / m^{(k+2)/t}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowSummary {
    pub m: u64,
    pub points: usize,
    pub win_interval: Option<(u64, u64)>,
    pub a_emp: Option<f64>,
    pub b_emp: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegionReport {
    pub s: u32,
    pub t: u32,
    pub k: u32,
    pub grid: Vec<GridPoint>,
    pub boundary: Vec<RowSummary>,
}

/// For each m, scans n over a geometric grid of `n_per_m` points spanning
/// [m^{(k+1)/t}/10, 10*m^{(k+2)/t}] and records the winning k at every
/// point, then summarizes the interval of n where the requested k is the
/// strict winner. Requires s,t >= 3 and 0 <= k <= s-2.
pub fn dominance_scan(
    s: u32,
    t: u32,
    k: u32,
    m_values: &[u64],
    n_per_m: usize,
) -> Result<RegionReport> {
    if s < 3 || t < 3 {
        return Err(Error::Domain(format!(
            "dominance scan requires s,t >= 3, got s={s}, t={t}"
        )));
    }
    if k + 2 > s {
        return Err(Error::Domain(format!(
            "k must lie in [0, s-2] = [0, {}], got k={k}",
            s - 2
        )));
    }
    if n_per_m == 0 {
        return Err(Error::Domain("the grid needs at least one point per m".into()));
    }
    let mut grid = Vec::new();
    let mut boundary = Vec::new();
    for &m in m_values {
        if m < 1 {
            return Err(Error::Domain("m values must be positive".into()));
        }
        let mf = m as f64;
        let tf = f64::from(t);
        let lo = (mf.powf(f64::from(k + 1) / tf) / 10.0).max(1.0);
        let hi = 10.0 * mf.powf(f64::from(k + 2) / tf);
        if !hi.is_finite() || hi > 1e15 {
            return Err(Error::TooLarge(format!(
                "scan window upper endpoint {hi:e} exceeds the supported range"
            )));
        }
        let ratio = hi / lo;
        let mut last_n = 0u64;
        let row_start = grid.len();
        let mut win_lo: Option<u64> = None;
        let mut win_hi: Option<u64> = None;
        for j in 0..n_per_m {
            let frac = if n_per_m == 1 { 0.0 } else { j as f64 / (n_per_m - 1) as f64 };
            let n = (lo * ratio.powf(frac)).round().max(1.0) as u64;
            if n == last_n {
                continue;
            }
            last_n = n;
            let inst = ZInstance::new(m, n, s, t)?;
            let (winner, best_value) = best_k(&inst);
            let mut strict = true;
            for i in 0..=s - 2 {
                if i == winner {
                    continue;
                }
                let other = generic_bound(&inst, i)?;
                if best_value >= other - BOUND_REL_TOL * other.abs() {
                    strict = false;
                    break;
                }
            }
            if winner == k && strict {
                win_lo.get_or_insert(n);
                win_hi = Some(n);
            }
            grid.push(GridPoint { m, n, winner, strict });
        }
        let win_interval = match (win_lo, win_hi) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        };
        boundary.push(RowSummary {
            m,
            points: grid.len() - row_start,
            win_interval,
            a_emp: win_interval.map(|(a, _)| a as f64 / mf.powf(f64::from(k + 1) / tf)),
            b_emp: win_interval.map(|(_, b)| b as f64 / mf.powf(f64::from(k + 2) / tf)),
        });
    }
    Ok(RegionReport { s, t, k, grid, boundary })
}
