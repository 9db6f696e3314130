//! Brute-force verification of the closed-form layer.
//!
//! Nothing here trusts the threshold formulas or the equilibrium menus of
//! [`crate::equilibrium`]. Stage-1 payoffs are assembled directly from the
//! random-dictator structure and the continuation payoffs; equilibria are
//! then checked by exhaustive search over pure intention profiles, by grid
//! scans over unilateral deviations, and effort solutions by alternating
//! best-response search on an effort grid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equilibrium::{
    enumerate_equilibria, eta_hat, knife_edge_pf, mu_hat, theorem_scope_bound, CheatProfile,
    EquilibriumKind,
};
use crate::model::{CheatDecision, EffortPair, ModelError, ModelParams, Role, RoleKind};

/// Resolution and tolerance of the brute-force searches.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Number of grid points on [0, 1] for intention probabilities.
    pub sigma_steps: usize,
    /// Number of grid points on [0, prize * revenue_share] for efforts.
    pub effort_steps: usize,
    /// Payoff tolerance certifying an epsilon-equilibrium, on normalized
    /// (prize = 1) payoffs.
    pub epsilon: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { sigma_steps: 101, effort_steps: 2001, epsilon: 1e-6 }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.sigma_steps < 2 || self.effort_steps < 2 {
            return Err(OracleError::InvalidGrid("grids need at least 2 steps".into()));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(OracleError::InvalidGrid("epsilon must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("effort best-response search did not reach a fixed point after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Outcome of scanning one player's unilateral deviations.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeviationReport {
    pub profile: CheatProfile,
    pub player: Role,
    /// Intention probability attaining the best deviation payoff.
    pub best_alternative: f64,
    /// Payoff improvement of the best deviation over the profile; zero or
    /// epsilon-small certifies the player.
    pub gain: f64,
}

impl DeviationReport {
    pub fn certifies(&self, epsilon: f64) -> bool {
        self.gain <= epsilon
    }
}

/// Expected stage-1 payoff of `player` declaring a cheating intention with
/// probability `own_intent_prob`, while everyone else follows `profile`.
///
/// The own team implements the player's intention with probability 1/2 and
/// the teammate's with probability 1/2; the rival team cheats with its
/// profile probability; terminal payoffs are the continuation payoffs under
/// equilibrium efforts.
pub fn stage1_expected_payoff(
    player: Role,
    own_intent_prob: f64,
    profile: &CheatProfile,
    params: &ModelParams,
) -> f64 {
    let teammate_sigma = profile.sigma(player.teammate());
    let own_cheat_prob = 0.5 * (own_intent_prob + teammate_sigma);
    let rival_cheat_prob = profile.team_cheat_prob(player.team.rival());

    let mut total = 0.0;
    for (own_d, p_own) in decision_weights(own_cheat_prob) {
        for (rival_d, p_rival) in decision_weights(rival_cheat_prob) {
            let terminal = match player.kind {
                RoleKind::Contestant => params.contestant_continuation_payoff(own_d, rival_d),
                RoleKind::Manager => params.manager_continuation_payoff(own_d, rival_d),
            };
            total += p_own * p_rival * terminal;
        }
    }
    total
}

fn decision_weights(cheat_prob: f64) -> [(CheatDecision, f64); 2] {
    [
        (CheatDecision::Clean, 1.0 - cheat_prob),
        (CheatDecision::Cheat, cheat_prob),
    ]
}

/// Exhaustively checks all 16 pure intention profiles and returns those
/// where no player gains more than `grid.epsilon` by flipping their
/// intention.
pub fn verify_pure_equilibria(params: &ModelParams, grid: &GridSpec) -> Vec<CheatProfile> {
    let mut found = Vec::new();
    for bits in 0u8..16 {
        let profile = CheatProfile::pure(bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, (bits >> 3) & 1);
        let is_equilibrium = Role::ALL.iter().all(|&player| {
            let own = profile.sigma(player);
            let current = stage1_expected_payoff(player, own, &profile, params);
            let flipped = stage1_expected_payoff(player, 1.0 - own, &profile, params);
            flipped - current <= grid.epsilon
        });
        if is_equilibrium {
            found.push(profile);
        }
    }
    found
}

/// Scans each player's intention probability over the sigma grid, holding
/// everyone else at `profile`, and reports the best unilateral gain. All
/// four gains at or below `grid.epsilon` certify an epsilon-equilibrium.
pub fn verify_mixed_equilibrium(
    profile: &CheatProfile,
    params: &ModelParams,
    grid: &GridSpec,
) -> Vec<DeviationReport> {
    let steps = grid.sigma_steps.max(2);
    Role::ALL
        .iter()
        .map(|&player| {
            let current = stage1_expected_payoff(player, profile.sigma(player), profile, params);
            let mut best_alternative = profile.sigma(player);
            let mut best_payoff = current;
            for k in 0..steps {
                let sigma = k as f64 / (steps - 1) as f64;
                let payoff = stage1_expected_payoff(player, sigma, profile, params);
                if payoff > best_payoff {
                    best_payoff = payoff;
                    best_alternative = sigma;
                }
            }
            DeviationReport {
                profile: *profile,
                player,
                best_alternative,
                gain: (best_payoff - current).max(0.0),
            }
        })
        .collect()
}

/// Alternating best-response search for the effort stage on a grid over
/// [0, prize * revenue_share]. Payoffs are negative beyond that upper bound
/// (the share is at most 1), so the truncation loses nothing.
///
/// Returns the fixed point, which must sit within one grid step of the
/// closed-form equilibrium effort for the search to mean anything.
pub fn verify_effort_stage(
    own_decision: CheatDecision,
    rival_decision: CheatDecision,
    params: &ModelParams,
    grid: &GridSpec,
) -> Result<EffortPair, OracleError> {
    grid.validate()?;
    params.validate()?;
    let steps = grid.effort_steps;
    let upper = params.prize * params.revenue_share;
    let effort_at = |k: usize| upper * k as f64 / (steps - 1) as f64;

    let best_reply_index = |rival_effort: f64, own_d: CheatDecision, rival_d: CheatDecision| {
        let mut best_k = 0;
        let mut best_payoff = f64::NEG_INFINITY;
        for k in 0..steps {
            let payoff = params
                .contestant_payoff(effort_at(k), rival_effort, own_d, rival_d)
                .expect("grid efforts are non-negative");
            if payoff > best_payoff {
                best_payoff = payoff;
                best_k = k;
            }
        }
        best_k
    };

    // The discrete dynamics either hit an exact grid fixed point or fall
    // into a small limit cycle when the true optimum sits between grid
    // points. A revisited state whose orbit stays within one grid step per
    // coordinate counts as converged; anything wider is a real failure.
    const MAX_SWEEPS: usize = 10_000;
    let mut seen: Vec<(usize, usize)> = Vec::new();
    let mut state = (steps / 2, steps / 2);
    for _ in 0..MAX_SWEEPS {
        let next_k1 = best_reply_index(effort_at(state.1), own_decision, rival_decision);
        let next_k2 = best_reply_index(effort_at(next_k1), rival_decision, own_decision);
        let next = (next_k1, next_k2);
        if next == state {
            return Ok(EffortPair { team1: effort_at(next.0), team2: effort_at(next.1) });
        }
        if let Some(start) = seen.iter().position(|&s| s == next) {
            let cycle = &seen[start..];
            let amplitude = |f: fn(&(usize, usize)) -> usize| {
                let lo = cycle.iter().map(f).min().unwrap_or(next.0);
                let hi = cycle.iter().map(f).max().unwrap_or(next.0);
                hi - lo
            };
            if amplitude(|s| s.0) <= 1 && amplitude(|s| s.1) <= 1 {
                return Ok(EffortPair { team1: effort_at(next.0), team2: effort_at(next.1) });
            }
            return Err(OracleError::NoConvergence { sweeps: seen.len() });
        }
        seen.push(next);
        state = next;
    }
    Err(OracleError::NoConvergence { sweeps: MAX_SWEEPS })
}

/// One parameter point that violated a theorem assertion.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremFailure {
    pub delta: f64,
    pub revenue_share: f64,
    pub pf_rel: f64,
    pub message: String,
}

/// Aggregate outcome of [`verify_theorem_samples`].
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<TheoremFailure>,
}

impl TheoremSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Draws `n` parameter points inside the theorem's scope (expected fine
/// above the scope bound) and asserts, on a liability grid, the three
/// comparative-statics cases: fines below the knife edge can only raise
/// equilibrium cheating relative to full contestant liability, the knife
/// edge pins it at one half, and fines above it can only lower it.
///
/// The draws deliberately mix the three fine regimes, including exact
/// knife-edge points, and the liability grid is augmented with an analytic
/// witness inside the strict-inequality region so the existence half of each
/// case is actually exercised. Grid points sitting on the non-generic
/// manager-indifference threshold are skipped; the enumeration reports the
/// bracketing menus there rather than a single regime.
pub fn verify_theorem_samples(n: usize, seed: u64) -> TheoremSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(f64, f64, f64)> = (0..n)
        .map(|_| {
            let delta = 1.0 + rng.gen_range(1e-3..=4.0);
            let revenue_share = rng.gen_range(0.001..0.999);
            let scope = theorem_scope_bound(delta, revenue_share);
            let knife = knife_edge_pf(delta);
            let pf_rel = match rng.gen_range(0u8..10) {
                0..=3 => scope + (knife - scope) * rng.gen_range(0.02..0.98),
                4 => knife,
                _ => knife * rng.gen_range(1.02..3.0),
            };
            (delta, revenue_share, pf_rel)
        })
        .collect();

    let failures: Vec<TheoremFailure> = draws
        .par_iter()
        .filter_map(|&(delta, revenue_share, pf_rel)| {
            check_theorem_point(delta, revenue_share, pf_rel).err().map(|message| TheoremFailure {
                delta,
                revenue_share,
                pf_rel,
                message,
            })
        })
        .collect();

    TheoremSummary { checked: n, failed: failures.len(), failures }
}

/// Checks the applicable theorem case at one (delta, r, pf_rel) point over a
/// 101-point liability grid. Public so the verification CLI and the
/// acceptance suite can drive single points.
pub fn check_theorem_point(delta: f64, revenue_share: f64, pf_rel: f64) -> Result<(), String> {
    let scope = theorem_scope_bound(delta, revenue_share);
    let knife = knife_edge_pf(delta);
    if pf_rel <= scope {
        return Err(format!("pf_rel {pf_rel} outside theorem scope (bound {scope})"));
    }

    let bounds_at = |eta: f64| -> Result<(f64, f64), String> {
        let params = ModelParams::from_pf_rel(delta, revenue_share, eta, pf_rel)
            .map_err(|e| e.to_string())?;
        let set = enumerate_equilibria(&params).map_err(|e| e.to_string())?;
        Ok((set.p_bar_low, set.p_bar_high))
    };
    let at_manager_threshold = |eta: f64| {
        let params = ModelParams::from_pf_rel(delta, revenue_share, eta, pf_rel)
            .expect("validated by bounds_at");
        matches!(eta_hat(&params), Some(threshold) if crate::model::near(eta, threshold))
    };

    // Full-liability baseline: in scope, exactly the managers-only
    // equilibrium with average probability one half.
    let (base_low, base_high) = bounds_at(1.0)?;
    if (base_low - 0.5).abs() > 1e-12 || (base_high - 0.5).abs() > 1e-12 {
        return Err(format!(
            "baseline at full liability is [{base_low}, {base_high}], expected exactly 1/2"
        ));
    }

    let mut etas: Vec<f64> = (0..=100).map(|k| k as f64 / 100.0).collect();
    // Analytic witness for the strict-inequality half of cases 1 and 3: the
    // midpoint of the open interval where the strict comparison holds.
    if (pf_rel - knife).abs() > 1e-15 {
        let eta_scope = scope / pf_rel;
        let eta_manager = 1.0
            - (delta - 1.0) * (1.0 - revenue_share) / ((1.0 + delta) * 2.0 * pf_rel);
        let (lo, hi) = if pf_rel < knife {
            (eta_manager.max(0.0), eta_scope.min(1.0))
        } else {
            (eta_scope.max(0.0), eta_manager.min(1.0))
        };
        if hi > lo {
            etas.push(0.5 * (lo + hi));
        }
    }

    let mut strict_seen = false;
    for &eta in &etas {
        if at_manager_threshold(eta) {
            continue;
        }
        let (low, high) = bounds_at(eta)?;
        if (pf_rel - knife).abs() <= 1e-15 {
            if (low - 0.5).abs() > 1e-12 || (high - 0.5).abs() > 1e-12 {
                return Err(format!(
                    "knife edge: bounds [{low}, {high}] at eta {eta}, expected exactly 1/2"
                ));
            }
        } else if pf_rel < knife {
            if low < 0.5 - 1e-12 {
                return Err(format!("backfire case: p_bar_low {low} < 1/2 at eta {eta}"));
            }
            strict_seen |= low > 0.5 + 1e-9;
        } else {
            if high > 0.5 + 1e-12 {
                return Err(format!("high-fine case: p_bar_high {high} > 1/2 at eta {eta}"));
            }
            strict_seen |= high < 0.5 - 1e-9;
        }
    }

    if (pf_rel - knife).abs() > 1e-15 && !strict_seen {
        return Err("no liability share with a strict change in cheating found".into());
    }
    Ok(())
}

/// One parameter set where the enumeration and the brute-force search
/// disagreed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EquivalenceFailure {
    pub params: ModelParams,
    pub message: String,
}

/// Aggregate outcome of [`verify_oracle_equivalence`].
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EquivalenceSummary {
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<EquivalenceFailure>,
}

impl EquivalenceSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Draws `n` random non-boundary parameter sets and checks that the
/// exhaustive pure-profile search returns exactly the pure equilibria of the
/// enumeration, and that every enumerated contestant-mixing equilibrium
/// certifies under the deviation scan.
///
/// Draws are normalized (prize 1) and kept a safe margin away from every
/// threshold, so an epsilon of 1e-6 cleanly separates equilibria from
/// near-equilibria.
pub fn verify_oracle_equivalence(n: usize, seed: u64, grid: &GridSpec) -> EquivalenceSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params: Vec<ModelParams> = (0..n).map(|_| sample_non_boundary_params(&mut rng)).collect();

    let failures: Vec<EquivalenceFailure> = params
        .par_iter()
        .filter_map(|p| {
            check_equivalence_point(p, grid).err().map(|message| EquivalenceFailure {
                params: *p,
                message,
            })
        })
        .collect();

    EquivalenceSummary { checked: n, failed: failures.len(), failures }
}

/// Margin kept between sampled points and every threshold. Wide enough that
/// the smallest unilateral deviation payoff among the sampled games exceeds
/// the certification epsilon by orders of magnitude.
const BOUNDARY_MARGIN: f64 = 0.01;

/// Draws a normalized parameter set a safe margin away from the contestant
/// and manager indifference thresholds.
pub fn sample_non_boundary_params(rng: &mut ChaCha8Rng) -> ModelParams {
    loop {
        let delta = rng.gen_range(1.3..=5.0);
        let revenue_share = rng.gen_range(0.2..=0.9);
        let liability_share = rng.gen_range(0.0..=1.0);
        let pf_rel = rng.gen_range(0.01..=0.5);
        let params = ModelParams::from_pf_rel(delta, revenue_share, liability_share, pf_rel)
            .expect("sampled ranges are valid");
        let mu = mu_hat(&params);
        if [0.0, 0.5, 1.0].iter().any(|level| (mu - level).abs() < BOUNDARY_MARGIN) {
            continue;
        }
        if let Some(threshold) = eta_hat(&params) {
            if (liability_share - threshold).abs() < BOUNDARY_MARGIN {
                continue;
            }
        }
        return params;
    }
}

/// Compares the enumeration with the brute-force searches at one parameter
/// set. Public for the verification CLI's negative-control mode, which feeds
/// a deliberately perturbed enumeration through the same comparison.
pub fn check_equivalence_point(params: &ModelParams, grid: &GridSpec) -> Result<(), String> {
    let set = enumerate_equilibria(params).map_err(|e| e.to_string())?;
    check_equivalence_against(params, &set.equilibria, grid)
}

/// Same comparison, but against an explicitly supplied equilibrium list.
pub fn check_equivalence_against(
    params: &ModelParams,
    claimed: &[crate::equilibrium::Equilibrium],
    grid: &GridSpec,
) -> Result<(), String> {
    let brute_pure = verify_pure_equilibria(params, grid);
    let claimed_pure: Vec<CheatProfile> = claimed
        .iter()
        .filter(|e| e.kind != EquilibriumKind::MixedContestants)
        .map(|e| e.profile)
        .collect();

    let same = |a: &CheatProfile, b: &CheatProfile| {
        a.as_array()
            .iter()
            .zip(b.as_array())
            .all(|(x, y)| (x - y).abs() < 1e-9)
    };
    for profile in &brute_pure {
        if !claimed_pure.iter().any(|c| same(c, profile)) {
            return Err(format!(
                "brute-force equilibrium {:?} missing from enumeration",
                profile.as_array()
            ));
        }
    }
    for profile in &claimed_pure {
        if !brute_pure.iter().any(|c| same(c, profile)) {
            return Err(format!(
                "enumerated profile {:?} rejected by exhaustive search",
                profile.as_array()
            ));
        }
    }

    for equilibrium in claimed.iter().filter(|e| e.kind == EquilibriumKind::MixedContestants) {
        for report in verify_mixed_equilibrium(&equilibrium.profile, params, grid) {
            if !report.certifies(grid.epsilon) {
                return Err(format!(
                    "mixed profile {:?}: player {} gains {} by moving to {}",
                    equilibrium.profile.as_array(),
                    report.player.label(),
                    report.gain,
                    report.best_alternative
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Role, Team};

    fn normalized(eta: f64, pf_rel: f64) -> ModelParams {
        ModelParams::from_pf_rel(2.0, 2.0 / 3.0, eta, pf_rel).unwrap()
    }

    const JO_H: f64 = 13.0 / 72.0;
    const JO_L: f64 = 11.0 / 72.0;
    const F40: f64 = 1.0 / 9.0;

    #[test]
    fn stage1_all_clean_contestant_payoff() {
        let params = normalized(2.0 / 3.0, JO_H);
        let profile = CheatProfile::pure(0, 0, 0, 0);
        let pay = stage1_expected_payoff(Role::ALL[1], 0.0, &profile, &params);
        assert!((pay - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn stage1_contestant_indifferent_at_mu_hat() {
        // Rival team cheats with probability 1/4 = mu_hat; the contestant's
        // payoff is flat in the own intention probability.
        let params = normalized(2.0 / 3.0, JO_H);
        let profile = CheatProfile::new(0.0, 0.3, 0.0, 0.5).unwrap();
        let c1 = Role::ALL[1];
        let at0 = stage1_expected_payoff(c1, 0.0, &profile, &params);
        let at1 = stage1_expected_payoff(c1, 1.0, &profile, &params);
        assert!((at0 - at1).abs() < 1e-12);
    }

    #[test]
    fn stage1_manager_slope_is_half_the_payoff_difference() {
        let params = normalized(2.0 / 3.0, JO_H);
        for profile in [
            CheatProfile::new(0.0, 0.2, 0.9, 0.4).unwrap(),
            CheatProfile::new(1.0, 1.0, 0.0, 0.0).unwrap(),
        ] {
            let m1 = Role::ALL[0];
            let slope = stage1_expected_payoff(m1, 1.0, &profile, &params)
                - stage1_expected_payoff(m1, 0.0, &profile, &params);
            // Half the cheat-minus-clean difference, independent of the rival.
            assert!((slope - 0.5 * (-1.0 / 216.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn pure_search_matches_treatments() {
        let grid = GridSpec::default();
        let arrays = |v: Vec<CheatProfile>| -> Vec<[f64; 4]> {
            v.into_iter().map(|p| p.as_array()).collect()
        };

        let ind_h = verify_pure_equilibria(&normalized(1.0, JO_H), &grid);
        assert_eq!(arrays(ind_h), vec![[1.0, 0.0, 1.0, 0.0]]);

        let jo_l = verify_pure_equilibria(&normalized(2.0 / 3.0, JO_L), &grid);
        let mut got = arrays(jo_l);
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(got, vec![[1.0, 0.0, 1.0, 1.0], [1.0, 1.0, 1.0, 0.0]]);

        let jo_40 = verify_pure_equilibria(&normalized(2.0 / 3.0, F40), &grid);
        assert!(arrays(jo_40).contains(&[1.0, 1.0, 1.0, 1.0]));
    }

    #[test]
    fn mixed_certification_and_negative_control() {
        let grid = GridSpec::default();
        let params = normalized(2.0 / 3.0, JO_H);
        let mixed = CheatProfile::new(0.0, 0.5, 0.0, 0.5).unwrap();
        for report in verify_mixed_equilibrium(&mixed, &params, &grid) {
            assert!(report.certifies(grid.epsilon), "{report:?}");
        }

        let params_l = normalized(2.0 / 3.0, JO_L);
        let mixed_l = CheatProfile::new(1.0, 0.5, 1.0, 0.5).unwrap();
        for report in verify_mixed_equilibrium(&mixed_l, &params_l, &grid) {
            assert!(report.certifies(grid.epsilon), "{report:?}");
        }

        // Perturbed profile: team 1 cheats too often, so the rival
        // contestant must want to deviate.
        let perturbed = CheatProfile::new(0.0, 0.9, 0.0, 0.5).unwrap();
        let reports = verify_mixed_equilibrium(&perturbed, &params, &grid);
        let flagged: Vec<_> = reports.iter().filter(|r| !r.certifies(grid.epsilon)).collect();
        assert!(!flagged.is_empty());
        assert!(flagged
            .iter()
            .any(|r| r.player.kind == RoleKind::Contestant && r.player.team == Team::Two));
    }

    #[test]
    fn effort_grid_search_matches_closed_form() {
        use CheatDecision::{Cheat, Clean};
        let grid = GridSpec::default();
        let lab = ModelParams::new(2.0, 2.0 / 3.0, 0.25, 65.0, 1.0, 90.0).unwrap();
        let step = lab.prize * lab.revenue_share / (grid.effort_steps - 1) as f64;

        let even = verify_effort_stage(Clean, Clean, &lab, &grid).unwrap();
        assert!((even.team1 - 15.0).abs() <= step);
        assert!((even.team2 - 15.0).abs() <= step);

        let uneven = verify_effort_stage(Cheat, Clean, &lab, &grid).unwrap();
        assert!((uneven.team1 - 40.0 / 3.0).abs() <= step);
        assert!((uneven.team2 - 40.0 / 3.0).abs() <= step);

        let unit = normalized(1.0, JO_H);
        let step = unit.prize * unit.revenue_share / (grid.effort_steps - 1) as f64;
        let even = verify_effort_stage(Clean, Clean, &unit, &grid).unwrap();
        assert!((even.team1 - 1.0 / 6.0).abs() <= step);
    }

    #[test]
    fn effort_fixed_point_ignores_liability() {
        use CheatDecision::Cheat;
        let grid = GridSpec { effort_steps: 501, ..GridSpec::default() };
        let mut pairs = Vec::new();
        for eta in [0.0, 0.5, 1.0] {
            let p = ModelParams::new(2.0, 2.0 / 3.0, 0.25, 65.0, eta, 90.0).unwrap();
            pairs.push(verify_effort_stage(Cheat, Cheat, &p, &grid).unwrap());
        }
        assert!(pairs.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn theorem_sampling_passes() {
        let summary = verify_theorem_samples(60, 42);
        assert_eq!(summary.checked, 60);
        assert!(summary.all_passed(), "{:?}", summary.failures);
    }

    #[test]
    fn theorem_point_rejects_out_of_scope() {
        // pf_rel at the scope bound is excluded.
        let scope = theorem_scope_bound(2.0, 2.0 / 3.0);
        assert!(check_theorem_point(2.0, 2.0 / 3.0, scope).is_err());
    }

    #[test]
    fn theorem_knife_edge_point() {
        assert!(check_theorem_point(2.0, 2.0 / 3.0, knife_edge_pf(2.0)).is_ok());
    }

    #[test]
    fn oracle_equivalence_random_sets() {
        let summary = verify_oracle_equivalence(25, 7, &GridSpec::default());
        assert!(summary.all_passed(), "{:?}", summary.failures);
    }
}
