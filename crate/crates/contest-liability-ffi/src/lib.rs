//! C ABI for the contest-liability analysis layer.
//!
//! The surface follows the usual C-binding conventions: opaque handles
//! created and destroyed by paired functions, status codes for every
//! fallible call, and plain doubles for all quantities. The header
//! `include/contest_liability.h` is generated from this file at build time.
//!
//! Thread safety: handles are immutable after construction, so sharing a
//! `*const` handle across threads is safe; creation and destruction of a
//! given handle must not race.

use std::ffi::{c_char, c_int, CStr};
use std::ptr;

use contest_liability::equilibrium::{
    classify_region, enumerate_equilibria, eta_hat, mu_hat, CheatProfile, EquilibriumKind,
    EquilibriumSet, FineRegime, ManagerRegime,
};
use contest_liability::model::{CheatDecision, ModelParams};
use contest_liability::sim::{self, AgentPolicy, Treatment};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A parameter violated its domain constraint.
    InvalidParameter = 2,
    /// A cheating decision was not 0 or 1.
    InvalidDecision = 3,
    /// An index was out of range.
    IndexOutOfRange = 4,
    /// The requested quantity is undefined at these parameters
    /// (zero expected fine for the manager threshold).
    Undefined = 5,
    /// An unknown treatment or policy name.
    UnknownName = 6,
    /// The simulation rejected its configuration.
    SimulationFailed = 7,
}

/// Fine regime of a parameter point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcFineRegime {
    BelowTheoremScope = 0,
    BackfireRange = 1,
    KnifeEdge = 2,
    HighFineRange = 3,
}

/// Manager regime of a parameter point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcManagerRegime {
    ManagersCheat = 0,
    ManagersIndifferent = 1,
    ManagersClean = 2,
}

/// Structural kind of an equilibrium.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcEquilibriumKind {
    PureSymmetric = 0,
    PureAsymmetric = 1,
    MixedContestants = 2,
}

/// Aggregate of a simulation batch.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct LcBatchSummary {
    pub overall_cheat_rate: f64,
    pub contestant_cheat_rate: f64,
    pub manager_cheat_rate: f64,
    pub mean_effort: f64,
    pub mean_over_dissipation: f64,
    pub matching_probability: f64,
    pub caught_rate_given_cheating: f64,
    pub cheating_team_rounds: u64,
    pub caught_team_rounds: u64,
}

/// Opaque parameter handle.
pub struct LcParams(ModelParams);

/// Opaque equilibrium-set handle.
pub struct LcEquilibriumSet(EquilibriumSet);

fn decision(value: c_int) -> Result<CheatDecision, LcStatus> {
    match value {
        0 => Ok(CheatDecision::Clean),
        1 => Ok(CheatDecision::Cheat),
        _ => Err(LcStatus::InvalidDecision),
    }
}

unsafe fn params_ref<'a>(handle: *const LcParams) -> Result<&'a ModelParams, LcStatus> {
    handle.as_ref().map(|h| &h.0).ok_or(LcStatus::NullPointer)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> LcStatus {
    if out.is_null() {
        return LcStatus::NullPointer;
    }
    out.write(value);
    LcStatus::Ok
}

/// Creates a parameter handle. On success writes the handle to `out`;
/// release it with `lc_params_free`.
#[no_mangle]
pub unsafe extern "C" fn lc_params_new(
    delta: f64,
    revenue_share: f64,
    audit_prob: f64,
    fine: f64,
    liability_share: f64,
    prize: f64,
    out: *mut *mut LcParams,
) -> LcStatus {
    if out.is_null() {
        return LcStatus::NullPointer;
    }
    match ModelParams::new(delta, revenue_share, audit_prob, fine, liability_share, prize) {
        Ok(params) => {
            out.write(Box::into_raw(Box::new(LcParams(params))));
            LcStatus::Ok
        }
        Err(_) => {
            out.write(ptr::null_mut());
            LcStatus::InvalidParameter
        }
    }
}

/// Creates a normalized (prize 1) handle from the expected fine per unit of
/// the prize.
#[no_mangle]
pub unsafe extern "C" fn lc_params_from_pf_rel(
    delta: f64,
    revenue_share: f64,
    liability_share: f64,
    pf_rel: f64,
    out: *mut *mut LcParams,
) -> LcStatus {
    if out.is_null() {
        return LcStatus::NullPointer;
    }
    match ModelParams::from_pf_rel(delta, revenue_share, liability_share, pf_rel) {
        Ok(params) => {
            out.write(Box::into_raw(Box::new(LcParams(params))));
            LcStatus::Ok
        }
        Err(_) => {
            out.write(ptr::null_mut());
            LcStatus::InvalidParameter
        }
    }
}

/// Creates the calibrated parameters of a named treatment
/// (Jo_H, Jo_L, Ind_H, Ind_L, Jo_40, Ind_40).
#[no_mangle]
pub unsafe extern "C" fn lc_params_treatment(
    name: *const c_char,
    out: *mut *mut LcParams,
) -> LcStatus {
    if name.is_null() || out.is_null() {
        return LcStatus::NullPointer;
    }
    let Ok(name) = CStr::from_ptr(name).to_str() else {
        return LcStatus::UnknownName;
    };
    match name.parse::<Treatment>() {
        Ok(treatment) => {
            out.write(Box::into_raw(Box::new(LcParams(treatment.preset().params))));
            LcStatus::Ok
        }
        Err(_) => {
            out.write(ptr::null_mut());
            LcStatus::UnknownName
        }
    }
}

/// Releases a parameter handle. Null is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn lc_params_free(handle: *mut LcParams) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Expected fine per unit of the prize.
#[no_mangle]
pub unsafe extern "C" fn lc_params_pf_rel(handle: *const LcParams, out: *mut f64) -> LcStatus {
    match params_ref(handle) {
        Ok(params) => write_out(out, params.pf_rel()),
        Err(status) => status,
    }
}

/// Tullock prize share of the own team. Decisions are 0 (clean) or 1 (cheat).
#[no_mangle]
pub unsafe extern "C" fn lc_prize_share(
    handle: *const LcParams,
    own_effort: f64,
    rival_effort: f64,
    own_decision: c_int,
    rival_decision: c_int,
    out: *mut f64,
) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let (own, rival) = match (decision(own_decision), decision(rival_decision)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return LcStatus::InvalidDecision,
    };
    match params.prize_share(own_effort, rival_effort, own, rival) {
        Ok(share) => write_out(out, share),
        Err(_) => LcStatus::InvalidParameter,
    }
}

/// Contestant's expected payoff at the given efforts and decisions.
#[no_mangle]
pub unsafe extern "C" fn lc_contestant_payoff(
    handle: *const LcParams,
    own_effort: f64,
    rival_effort: f64,
    own_decision: c_int,
    rival_decision: c_int,
    out: *mut f64,
) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let (own, rival) = match (decision(own_decision), decision(rival_decision)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return LcStatus::InvalidDecision,
    };
    match params.contestant_payoff(own_effort, rival_effort, own, rival) {
        Ok(payoff) => write_out(out, payoff),
        Err(_) => LcStatus::InvalidParameter,
    }
}

/// Manager's expected payoff at the given efforts and decisions.
#[no_mangle]
pub unsafe extern "C" fn lc_manager_payoff(
    handle: *const LcParams,
    own_effort: f64,
    rival_effort: f64,
    own_decision: c_int,
    rival_decision: c_int,
    out: *mut f64,
) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let (own, rival) = match (decision(own_decision), decision(rival_decision)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return LcStatus::InvalidDecision,
    };
    match params.manager_payoff(own_effort, rival_effort, own, rival) {
        Ok(payoff) => write_out(out, payoff),
        Err(_) => LcStatus::InvalidParameter,
    }
}

/// Closed-form equilibrium effort of the effort stage.
#[no_mangle]
pub unsafe extern "C" fn lc_equilibrium_effort(
    handle: *const LcParams,
    own_decision: c_int,
    rival_decision: c_int,
    out: *mut f64,
) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let (own, rival) = match (decision(own_decision), decision(rival_decision)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return LcStatus::InvalidDecision,
    };
    write_out(out, params.equilibrium_effort(own, rival))
}

/// Best response to the rival's effort, clamped at zero.
#[no_mangle]
pub unsafe extern "C" fn lc_best_response_effort(
    handle: *const LcParams,
    rival_effort: f64,
    own_decision: c_int,
    rival_decision: c_int,
    out: *mut f64,
) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let (own, rival) = match (decision(own_decision), decision(rival_decision)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return LcStatus::InvalidDecision,
    };
    match params.best_response_effort(rival_effort, own, rival) {
        Ok(effort) => write_out(out, effort),
        Err(_) => LcStatus::InvalidParameter,
    }
}

/// Rival-team cheating probability at which a contestant is indifferent.
/// May fall outside [0, 1].
#[no_mangle]
pub unsafe extern "C" fn lc_mu_hat(handle: *const LcParams, out: *mut f64) -> LcStatus {
    match params_ref(handle) {
        Ok(params) => write_out(out, mu_hat(params)),
        Err(status) => status,
    }
}

/// Liability share at which a manager is indifferent. Returns `Undefined`
/// when the expected fine is zero (managers then cheat for every share).
#[no_mangle]
pub unsafe extern "C" fn lc_eta_hat(handle: *const LcParams, out: *mut f64) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match eta_hat(params) {
        Some(threshold) => write_out(out, threshold),
        None => LcStatus::Undefined,
    }
}

/// Fine regime, manager regime, and contestant indifference point of a
/// parameter point. Any output pointer may be null to skip that value.
#[no_mangle]
pub unsafe extern "C" fn lc_classify_region(
    handle: *const LcParams,
    out_fine_regime: *mut LcFineRegime,
    out_manager_regime: *mut LcManagerRegime,
    out_mu_hat: *mut f64,
) -> LcStatus {
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    let region = classify_region(params);
    if !out_fine_regime.is_null() {
        out_fine_regime.write(match region.fine_regime {
            FineRegime::BelowTheoremScope => LcFineRegime::BelowTheoremScope,
            FineRegime::BackfireRange => LcFineRegime::BackfireRange,
            FineRegime::KnifeEdge => LcFineRegime::KnifeEdge,
            FineRegime::HighFineRange => LcFineRegime::HighFineRange,
        });
    }
    if !out_manager_regime.is_null() {
        out_manager_regime.write(match region.manager_regime {
            ManagerRegime::ManagersCheat => LcManagerRegime::ManagersCheat,
            ManagerRegime::ManagersIndifferent => LcManagerRegime::ManagersIndifferent,
            ManagerRegime::ManagersClean => LcManagerRegime::ManagersClean,
        });
    }
    if !out_mu_hat.is_null() {
        out_mu_hat.write(region.mu_hat);
    }
    LcStatus::Ok
}

/// Enumerates all generic equilibria. On success writes a handle to `out`;
/// release it with `lc_equilibrium_set_free`.
#[no_mangle]
pub unsafe extern "C" fn lc_enumerate_equilibria(
    handle: *const LcParams,
    out: *mut *mut LcEquilibriumSet,
) -> LcStatus {
    if out.is_null() {
        return LcStatus::NullPointer;
    }
    let params = match params_ref(handle) {
        Ok(p) => p,
        Err(status) => return status,
    };
    match enumerate_equilibria(params) {
        Ok(set) => {
            out.write(Box::into_raw(Box::new(LcEquilibriumSet(set))));
            LcStatus::Ok
        }
        Err(_) => {
            out.write(ptr::null_mut());
            LcStatus::InvalidParameter
        }
    }
}

/// Releases an equilibrium-set handle. Null is accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn lc_equilibrium_set_free(handle: *mut LcEquilibriumSet) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of equilibria in the set.
#[no_mangle]
pub unsafe extern "C" fn lc_equilibrium_set_len(
    handle: *const LcEquilibriumSet,
    out: *mut usize,
) -> LcStatus {
    match handle.as_ref() {
        Some(set) => write_out(out, set.0.equilibria.len()),
        None => LcStatus::NullPointer,
    }
}

/// Copies one equilibrium into caller-provided storage: the four intention
/// probabilities in (m1, c1, m2, c2) order, the structural kind, and the
/// average cheating probability. Any output pointer may be null.
#[no_mangle]
pub unsafe extern "C" fn lc_equilibrium_set_get(
    handle: *const LcEquilibriumSet,
    index: usize,
    out_sigmas: *mut f64,
    out_kind: *mut LcEquilibriumKind,
    out_avg_cheat_prob: *mut f64,
) -> LcStatus {
    let set = match handle.as_ref() {
        Some(set) => &set.0,
        None => return LcStatus::NullPointer,
    };
    let Some(equilibrium) = set.equilibria.get(index) else {
        return LcStatus::IndexOutOfRange;
    };
    if !out_sigmas.is_null() {
        let sigmas = equilibrium.profile.as_array();
        ptr::copy_nonoverlapping(sigmas.as_ptr(), out_sigmas, 4);
    }
    if !out_kind.is_null() {
        out_kind.write(match equilibrium.kind {
            EquilibriumKind::PureSymmetric => LcEquilibriumKind::PureSymmetric,
            EquilibriumKind::PureAsymmetric => LcEquilibriumKind::PureAsymmetric,
            EquilibriumKind::MixedContestants => LcEquilibriumKind::MixedContestants,
        });
    }
    if !out_avg_cheat_prob.is_null() {
        out_avg_cheat_prob.write(equilibrium.avg_cheat_prob);
    }
    LcStatus::Ok
}

/// Minimum and maximum average cheating probability over the set.
#[no_mangle]
pub unsafe extern "C" fn lc_equilibrium_set_bounds(
    handle: *const LcEquilibriumSet,
    out_low: *mut f64,
    out_high: *mut f64,
) -> LcStatus {
    let set = match handle.as_ref() {
        Some(set) => &set.0,
        None => return LcStatus::NullPointer,
    };
    if !out_low.is_null() {
        out_low.write(set.p_bar_low);
    }
    if !out_high.is_null() {
        out_high.write(set.p_bar_high);
    }
    LcStatus::Ok
}

/// Probability that both teams implement the same decision, from the four
/// intention probabilities in (m1, c1, m2, c2) order.
#[no_mangle]
pub unsafe extern "C" fn lc_matching_probability(
    sigmas: *const f64,
    out: *mut f64,
) -> LcStatus {
    if sigmas.is_null() {
        return LcStatus::NullPointer;
    }
    let s = std::slice::from_raw_parts(sigmas, 4);
    match CheatProfile::new(s[0], s[1], s[2], s[3]) {
        Ok(profile) => write_out(out, profile.matching_probability()),
        Err(_) => LcStatus::InvalidParameter,
    }
}

/// Runs a batch of seeded sessions under equilibrium play at a named
/// treatment and writes the aggregate. `equilibrium_index` selects an
/// equilibrium by enumeration position; pass a negative value for the one
/// with the lowest average cheating probability.
#[no_mangle]
pub unsafe extern "C" fn lc_simulate_batch(
    treatment: *const c_char,
    equilibrium_index: c_int,
    sessions: usize,
    seed: u64,
    out: *mut LcBatchSummary,
) -> LcStatus {
    if treatment.is_null() || out.is_null() {
        return LcStatus::NullPointer;
    }
    let Ok(name) = CStr::from_ptr(treatment).to_str() else {
        return LcStatus::UnknownName;
    };
    let Ok(treatment) = name.parse::<Treatment>() else {
        return LcStatus::UnknownName;
    };
    let preset = treatment.preset();
    let index = if equilibrium_index < 0 {
        let Ok(set) = enumerate_equilibria(&preset.params) else {
            return LcStatus::SimulationFailed;
        };
        set.equilibria
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.avg_cheat_prob.total_cmp(&b.1.avg_cheat_prob))
            .map(|(i, _)| i)
            .unwrap_or(0)
    } else {
        equilibrium_index as usize
    };
    let policies = [AgentPolicy::EquilibriumPlay { index }; 4];
    match sim::run_batch(&preset, &policies, sessions, seed) {
        Ok(summary) => {
            out.write(LcBatchSummary {
                overall_cheat_rate: summary.overall_cheat_rate.mean,
                contestant_cheat_rate: summary.contestant_cheat_rate.mean,
                manager_cheat_rate: summary.manager_cheat_rate.mean,
                mean_effort: summary.mean_effort.mean,
                mean_over_dissipation: summary.mean_over_dissipation.mean,
                matching_probability: summary.matching_probability.mean,
                caught_rate_given_cheating: summary.caught_rate_given_cheating,
                cheating_team_rounds: summary.cheating_team_rounds,
                caught_team_rounds: summary.caught_team_rounds,
            });
            LcStatus::Ok
        }
        Err(_) => LcStatus::SimulationFailed,
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lc_status_message(status: LcStatus) -> *const c_char {
    let message: &'static [u8] = match status {
        LcStatus::Ok => b"ok\0",
        LcStatus::NullPointer => b"null pointer argument\0",
        LcStatus::InvalidParameter => b"parameter outside its domain\0",
        LcStatus::InvalidDecision => b"cheating decision must be 0 or 1\0",
        LcStatus::IndexOutOfRange => b"index out of range\0",
        LcStatus::Undefined => b"quantity undefined at these parameters\0",
        LcStatus::UnknownName => b"unknown treatment or policy name\0",
        LcStatus::SimulationFailed => b"simulation rejected its configuration\0",
    };
    message.as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    unsafe fn jo_h() -> *mut LcParams {
        let mut handle = ptr::null_mut();
        let status = lc_params_new(2.0, 2.0 / 3.0, 0.25, 65.0, 2.0 / 3.0, 90.0, &mut handle);
        assert_eq!(status, LcStatus::Ok);
        handle
    }

    #[test]
    fn params_lifecycle_and_thresholds() {
        unsafe {
            let params = jo_h();
            let mut pf = 0.0;
            assert_eq!(lc_params_pf_rel(params, &mut pf), LcStatus::Ok);
            assert!((pf - 13.0 / 72.0).abs() < 1e-12);

            let mut mu = 0.0;
            assert_eq!(lc_mu_hat(params, &mut mu), LcStatus::Ok);
            assert!((mu - 0.25).abs() < 1e-12);

            let mut eta = 0.0;
            assert_eq!(lc_eta_hat(params, &mut eta), LcStatus::Ok);
            assert!((eta - 9.0 / 13.0).abs() < 1e-12);
            lc_params_free(params);
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        unsafe {
            let mut handle = ptr::null_mut();
            let status = lc_params_new(0.5, 0.5, 0.25, 65.0, 0.5, 90.0, &mut handle);
            assert_eq!(status, LcStatus::InvalidParameter);
            assert!(handle.is_null());
            let mut out = 0.0;
            assert_eq!(lc_mu_hat(ptr::null(), &mut out), LcStatus::NullPointer);
        }
    }

    #[test]
    fn zero_expected_fine_has_no_manager_threshold() {
        unsafe {
            let mut handle = ptr::null_mut();
            assert_eq!(lc_params_new(2.0, 0.5, 0.0, 65.0, 0.5, 90.0, &mut handle), LcStatus::Ok);
            let mut eta = f64::NAN;
            assert_eq!(lc_eta_hat(handle, &mut eta), LcStatus::Undefined);
            lc_params_free(handle);
        }
    }

    #[test]
    fn efforts_and_payoffs() {
        unsafe {
            let params = jo_h();
            let mut effort = 0.0;
            assert_eq!(lc_equilibrium_effort(params, 0, 0, &mut effort), LcStatus::Ok);
            assert!((effort - 15.0).abs() < 1e-9);
            assert_eq!(lc_equilibrium_effort(params, 1, 0, &mut effort), LcStatus::Ok);
            assert!((effort - 40.0 / 3.0).abs() < 1e-9);
            assert_eq!(lc_equilibrium_effort(params, 2, 0, &mut effort), LcStatus::InvalidDecision);

            let mut share = 0.0;
            assert_eq!(lc_prize_share(params, 10.0, 10.0, 1, 0, &mut share), LcStatus::Ok);
            assert!((share - 2.0 / 3.0).abs() < 1e-12);
            assert_eq!(
                lc_prize_share(params, -1.0, 10.0, 0, 0, &mut share),
                LcStatus::InvalidParameter
            );

            let mut br = 0.0;
            assert_eq!(lc_best_response_effort(params, 15.0, 1, 1, &mut br), LcStatus::Ok);
            assert!((br - 15.0).abs() < 1e-9);
            lc_params_free(params);
        }
    }

    #[test]
    fn enumeration_round_trip() {
        unsafe {
            let params = jo_h();
            let mut set = ptr::null_mut();
            assert_eq!(lc_enumerate_equilibria(params, &mut set), LcStatus::Ok);
            let mut len = 0usize;
            assert_eq!(lc_equilibrium_set_len(set, &mut len), LcStatus::Ok);
            assert_eq!(len, 3);

            let mut sigmas = [0.0; 4];
            let mut kind = LcEquilibriumKind::PureSymmetric;
            let mut p_bar = 0.0;
            assert_eq!(
                lc_equilibrium_set_get(set, 2, sigmas.as_mut_ptr(), &mut kind, &mut p_bar),
                LcStatus::Ok
            );
            assert_eq!(kind, LcEquilibriumKind::MixedContestants);
            assert!((p_bar - 0.25).abs() < 1e-9);
            assert!((sigmas[1] - 0.5).abs() < 1e-9);
            assert_eq!(
                lc_equilibrium_set_get(set, 3, ptr::null_mut(), ptr::null_mut(), ptr::null_mut()),
                LcStatus::IndexOutOfRange
            );

            let (mut low, mut high) = (0.0, 0.0);
            assert_eq!(lc_equilibrium_set_bounds(set, &mut low, &mut high), LcStatus::Ok);
            assert!((low - 0.25).abs() < 1e-9 && (high - 0.25).abs() < 1e-9);

            let mut matching = 0.0;
            assert_eq!(lc_matching_probability(sigmas.as_ptr(), &mut matching), LcStatus::Ok);
            assert!((matching - 5.0 / 8.0).abs() < 1e-9);

            lc_equilibrium_set_free(set);
            lc_params_free(params);
        }
    }

    #[test]
    fn treatment_lookup_and_simulation() {
        unsafe {
            let name = CString::new("Ind_H").unwrap();
            let mut params = ptr::null_mut();
            assert_eq!(lc_params_treatment(name.as_ptr(), &mut params), LcStatus::Ok);
            lc_params_free(params);

            let bogus = CString::new("Jo_X").unwrap();
            assert_eq!(lc_params_treatment(bogus.as_ptr(), &mut params), LcStatus::UnknownName);

            let mut summary = LcBatchSummary::default();
            assert_eq!(lc_simulate_batch(name.as_ptr(), -1, 50, 42, &mut summary), LcStatus::Ok);
            assert_eq!(summary.overall_cheat_rate, 0.5);
            assert_eq!(summary.manager_cheat_rate, 1.0);
        }
    }

    #[test]
    fn status_messages_are_c_strings() {
        for status in [LcStatus::Ok, LcStatus::Undefined, LcStatus::SimulationFailed] {
            let message = lc_status_message(status);
            assert!(!message.is_null());
            let text = unsafe { CStr::from_ptr(message) }.to_str().unwrap();
            assert!(!text.is_empty());
        }
    }
}
