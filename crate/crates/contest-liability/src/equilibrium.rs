//! Closed-form equilibrium analysis of the two-stage game.
//!
//! Stage 1: all four players pick cheating intentions; a random dictator
//! implements one intention per team. Stage 2: contestants exert effort
//! knowing both implemented decisions. With equilibrium continuation in the
//! effort stage, the intention game collapses to four players with the
//! continuation payoffs of [`crate::model`].
//!
//! Two thresholds organize everything:
//!
//! * [`mu_hat`] — the rival-team cheating probability at which a contestant
//!   is exactly indifferent between cheating and staying clean. Contestants
//!   cheat against rivals below it, stay clean above it.
//! * [`eta_hat`] — the contestant liability share at which a manager is
//!   indifferent. Managers cheat for higher shares, abstain for lower ones,
//!   regardless of what the rival team does.
//!
//! [`enumerate_equilibria`] turns the two thresholds into the complete menu
//! of generic equilibria; [`classify_region`] maps a parameter point to the
//! fine/liability regime that governs whether shifting liability onto the
//! manager lowers cheating or backfires.

use serde::{Deserialize, Serialize};

use crate::model::{near, CheatDecision, ModelError, ModelParams, Role, RoleKind, Team};

/// Intention probabilities of the four players, in (m1, c1, m2, c2) order.
///
/// A team's implemented cheating probability is the mean of its two members'
/// probabilities, courtesy of the uniform random dictator.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheatProfile {
    pub manager1: f64,
    pub contestant1: f64,
    pub manager2: f64,
    pub contestant2: f64,
}

impl CheatProfile {
    pub fn new(
        manager1: f64,
        contestant1: f64,
        manager2: f64,
        contestant2: f64,
    ) -> Result<Self, ModelError> {
        let profile = CheatProfile { manager1, contestant1, manager2, contestant2 };
        profile.validate()?;
        Ok(profile)
    }

    /// Profile from pure intentions (0 or 1 per player).
    pub fn pure(m1: u8, c1: u8, m2: u8, c2: u8) -> Self {
        CheatProfile {
            manager1: f64::from(m1.min(1)),
            contestant1: f64::from(c1.min(1)),
            manager2: f64::from(m2.min(1)),
            contestant2: f64::from(c2.min(1)),
        }
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for sigma in self.as_array() {
            if !(sigma.is_finite() && (0.0..=1.0).contains(&sigma)) {
                return Err(ModelError::InvalidProbability(sigma));
            }
        }
        Ok(())
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.manager1, self.contestant1, self.manager2, self.contestant2]
    }

    pub fn sigma(&self, role: Role) -> f64 {
        self.as_array()[role.index()]
    }

    pub fn with_sigma(&self, role: Role, value: f64) -> CheatProfile {
        let mut sigmas = self.as_array();
        sigmas[role.index()] = value;
        CheatProfile {
            manager1: sigmas[0],
            contestant1: sigmas[1],
            manager2: sigmas[2],
            contestant2: sigmas[3],
        }
    }

    /// Probability that the team's implemented decision is to cheat:
    /// the mean of the two members' intention probabilities.
    pub fn team_cheat_prob(&self, team: Team) -> f64 {
        match team {
            Team::One => 0.5 * (self.manager1 + self.contestant1),
            Team::Two => 0.5 * (self.manager2 + self.contestant2),
        }
    }

    /// Average cheating probability across the four players.
    pub fn avg_cheat_prob(&self) -> f64 {
        self.as_array().iter().sum::<f64>() / 4.0
    }

    /// Probability that both teams implement the same decision:
    /// `mu1 * mu2 + (1 - mu1) * (1 - mu2)`.
    pub fn matching_probability(&self) -> f64 {
        let mu1 = self.team_cheat_prob(Team::One);
        let mu2 = self.team_cheat_prob(Team::Two);
        mu1 * mu2 + (1.0 - mu1) * (1.0 - mu2)
    }

    /// True when every intention probability is degenerate (0 or 1 within
    /// tolerance).
    pub fn is_pure(&self) -> bool {
        self.as_array().iter().all(|&s| near(s, 0.0) || near(s, 1.0))
    }

    fn approx_eq(&self, other: &CheatProfile) -> bool {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .all(|(a, b)| (a - b).abs() <= 1e-9)
    }
}

/// Structural tag of an equilibrium profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquilibriumKind {
    /// All intentions degenerate and both teams play the same pair.
    PureSymmetric,
    /// All intentions degenerate but the teams differ.
    PureAsymmetric,
    /// Contestants randomize strictly between cheating and staying clean.
    MixedContestants,
}

/// One equilibrium of the intention game under equilibrium continuation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Equilibrium {
    pub profile: CheatProfile,
    pub kind: EquilibriumKind,
    /// Average cheating probability across the four players.
    pub avg_cheat_prob: f64,
}

/// Marks parameter points sitting exactly on a threshold, where the menus of
/// two adjacent regimes coexist.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryFlags {
    /// Liability share equals the manager-indifference threshold.
    pub eta_at_threshold: bool,
    /// Contestant indifference point sits at 0.
    pub mu_at_zero: bool,
    /// Contestant indifference point sits at 1/2.
    pub mu_at_half: bool,
    /// Contestant indifference point sits at 1.
    pub mu_at_one: bool,
}

impl BoundaryFlags {
    pub fn is_empty(&self) -> bool {
        !(self.eta_at_threshold || self.mu_at_zero || self.mu_at_half || self.mu_at_one)
    }
}

/// All generic equilibria at a parameter point, plus the spread of their
/// average cheating probabilities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumSet {
    pub equilibria: Vec<Equilibrium>,
    /// Minimum average cheating probability over the listed equilibria.
    pub p_bar_low: f64,
    /// Maximum average cheating probability over the listed equilibria.
    pub p_bar_high: f64,
    pub boundary_flags: BoundaryFlags,
}

impl EquilibriumSet {
    /// The first equilibrium attaining the minimum average cheating
    /// probability. Used for headline treatment predictions.
    pub fn lowest(&self) -> &Equilibrium {
        self.equilibria
            .iter()
            .min_by(|a, b| a.avg_cheat_prob.total_cmp(&b.avg_cheat_prob))
            .expect("equilibrium set is never empty")
    }

    /// The contestant-mixing equilibrium, when one exists.
    pub fn mixed(&self) -> Option<&Equilibrium> {
        self.equilibria.iter().find(|e| e.kind == EquilibriumKind::MixedContestants)
    }

    /// True when distinct average cheating probabilities coexist.
    pub fn has_multiplicity(&self) -> bool {
        !near(self.p_bar_low, self.p_bar_high)
    }
}

/// Position of the expected fine relative to the two theorem thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FineRegime {
    /// Expected fine at or below `r (delta - 1) / (2 (1 + delta))`: too weak
    /// to deter a fully liable contestant; outside the theorem's scope.
    BelowTheoremScope,
    /// Between the scope bound and the knife edge: shifting liability onto
    /// the manager can only raise equilibrium cheating.
    BackfireRange,
    /// Exactly `(delta - 1) / (2 (1 + delta))`: cheating probability pinned
    /// at one half for every liability split.
    KnifeEdge,
    /// Above the knife edge: joint liability can strictly reduce cheating
    /// and never raises it.
    HighFineRange,
}

/// Manager behavior implied by the liability share.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ManagerRegime {
    ManagersCheat,
    ManagersIndifferent,
    ManagersClean,
}

/// Classification of a parameter point in the (liability, fine) plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionClass {
    pub fine_regime: FineRegime,
    pub manager_regime: ManagerRegime,
    /// Contestant indifference point; may fall outside [0, 1].
    pub mu_hat: f64,
}

/// A best-response set: a single pure action or full indifference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BestResponse {
    /// Only intention probability 0 is optimal.
    Clean,
    /// Only intention probability 1 is optimal.
    Cheat,
    /// Every probability in [0, 1] is optimal.
    Indifferent,
}

impl BestResponse {
    pub fn contains(self, sigma: f64) -> bool {
        match self {
            BestResponse::Clean => near(sigma, 0.0),
            BestResponse::Cheat => near(sigma, 1.0),
            BestResponse::Indifferent => (0.0..=1.0).contains(&sigma),
        }
    }
}

/// Expected payoffs of one role from cheating versus staying clean, holding
/// the rival team's cheating probability fixed.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PayoffComparison {
    pub cheat: f64,
    pub clean: f64,
}

impl PayoffComparison {
    pub fn difference(&self) -> f64 {
        self.cheat - self.clean
    }
}

/// Rival-team cheating probability that leaves a contestant indifferent
/// between cheating and staying clean.
///
/// `[r ((delta/(1+delta))^2 - 1/4) - pf_rel * eta] / [r ((1+delta^2)/(1+delta)^2 - 1/2)]`
///
/// Not necessarily inside [0, 1]: below 0 the contestant never cheats,
/// above 1 cheating is dominant. The denominator is strictly positive for
/// any `delta > 1`.
pub fn mu_hat(params: &ModelParams) -> f64 {
    let d = params.delta;
    let r = params.revenue_share;
    let fine_on_contestant = params.pf_rel() * params.liability_share;
    let numerator = r * ((d / (1.0 + d)).powi(2) - 0.25) - fine_on_contestant;
    let denominator = r * ((1.0 + d * d) / (1.0 + d).powi(2) - 0.5);
    numerator / denominator
}

/// Contestant liability share that leaves a manager indifferent:
/// `1 - (delta - 1)(1 - r) / (2 (1 + delta) pf_rel)`.
///
/// May be negative, in which case managers cheat for every feasible share.
/// Returns `None` when the expected fine is zero: the threshold is then
/// undefined and managers cheat regardless of the liability split.
pub fn eta_hat(params: &ModelParams) -> Option<f64> {
    let pf = params.pf_rel();
    if pf == 0.0 {
        return None;
    }
    Some(1.0 - (params.delta - 1.0) * (1.0 - params.revenue_share) / ((1.0 + params.delta) * 2.0 * pf))
}

/// Expected continuation payoffs of a contestant whose team cheats or stays
/// clean, against a rival team cheating with probability `rival_cheat_prob`.
pub fn contestant_expected_payoffs(
    rival_cheat_prob: f64,
    params: &ModelParams,
) -> Result<PayoffComparison, ModelError> {
    expected_payoffs(rival_cheat_prob, params, RoleKind::Contestant)
}

/// Expected continuation payoffs of a manager whose team cheats or stays
/// clean. Their difference does not depend on the rival's probability.
pub fn manager_expected_payoffs(
    rival_cheat_prob: f64,
    params: &ModelParams,
) -> Result<PayoffComparison, ModelError> {
    expected_payoffs(rival_cheat_prob, params, RoleKind::Manager)
}

fn expected_payoffs(
    rival_cheat_prob: f64,
    params: &ModelParams,
    kind: RoleKind,
) -> Result<PayoffComparison, ModelError> {
    if !(rival_cheat_prob.is_finite() && (0.0..=1.0).contains(&rival_cheat_prob)) {
        return Err(ModelError::InvalidProbability(rival_cheat_prob));
    }
    let continuation = |own: CheatDecision, rival: CheatDecision| match kind {
        RoleKind::Contestant => params.contestant_continuation_payoff(own, rival),
        RoleKind::Manager => params.manager_continuation_payoff(own, rival),
    };
    let mix = |own: CheatDecision| {
        rival_cheat_prob * continuation(own, CheatDecision::Cheat)
            + (1.0 - rival_cheat_prob) * continuation(own, CheatDecision::Clean)
    };
    Ok(PayoffComparison { cheat: mix(CheatDecision::Cheat), clean: mix(CheatDecision::Clean) })
}

/// Contestant's best response to the rival team's cheating probability:
/// cheat below [`mu_hat`], stay clean above it, anything at it.
pub fn contestant_best_response(
    rival_cheat_prob: f64,
    params: &ModelParams,
) -> Result<BestResponse, ModelError> {
    if !(rival_cheat_prob.is_finite() && (0.0..=1.0).contains(&rival_cheat_prob)) {
        return Err(ModelError::InvalidProbability(rival_cheat_prob));
    }
    let threshold = mu_hat(params);
    Ok(if near(rival_cheat_prob, threshold) {
        BestResponse::Indifferent
    } else if rival_cheat_prob < threshold {
        BestResponse::Cheat
    } else {
        BestResponse::Clean
    })
}

/// Manager's best response. Independent of the rival team: abstain below
/// [`eta_hat`], cheat above it, anything at it.
pub fn manager_best_response(params: &ModelParams) -> BestResponse {
    match eta_hat(params) {
        None => BestResponse::Cheat,
        Some(threshold) => {
            if near(params.liability_share, threshold) {
                BestResponse::Indifferent
            } else if params.liability_share > threshold {
                BestResponse::Cheat
            } else {
                BestResponse::Clean
            }
        }
    }
}

fn classify_kind(profile: &CheatProfile) -> EquilibriumKind {
    if !profile.is_pure() {
        EquilibriumKind::MixedContestants
    } else if near(profile.manager1, profile.manager2)
        && near(profile.contestant1, profile.contestant2)
    {
        EquilibriumKind::PureSymmetric
    } else {
        EquilibriumKind::PureAsymmetric
    }
}

fn push_unique(list: &mut Vec<Equilibrium>, profile: CheatProfile) {
    if list.iter().any(|e| e.profile.approx_eq(&profile)) {
        return;
    }
    list.push(Equilibrium {
        profile,
        kind: classify_kind(&profile),
        avg_cheat_prob: profile.avg_cheat_prob(),
    });
}

/// Appends the contestant menu for a fixed manager intention.
///
/// `hi` and `lo` are the indifference-point levels separating the three
/// cases: all-cheat at or above `hi`, the asymmetric pair plus the symmetric
/// mix between, and the both-clean profile at or below `lo`. Points within
/// tolerance of a level get both adjacent menus.
fn contestant_menu(
    list: &mut Vec<Equilibrium>,
    manager_sigma: f64,
    mu: f64,
    hi: f64,
    lo: f64,
    mixed_sigma: f64,
) {
    let at_hi = near(mu, hi);
    let at_lo = near(mu, lo);
    if mu > hi || at_hi {
        push_unique(list, CheatProfile {
            manager1: manager_sigma,
            contestant1: 1.0,
            manager2: manager_sigma,
            contestant2: 1.0,
        });
    }
    if (mu > lo && mu < hi) || at_hi || at_lo {
        push_unique(list, CheatProfile {
            manager1: manager_sigma,
            contestant1: 1.0,
            manager2: manager_sigma,
            contestant2: 0.0,
        });
        push_unique(list, CheatProfile {
            manager1: manager_sigma,
            contestant1: 0.0,
            manager2: manager_sigma,
            contestant2: 1.0,
        });
        let sigma = mixed_sigma.clamp(0.0, 1.0);
        push_unique(list, CheatProfile {
            manager1: manager_sigma,
            contestant1: sigma,
            manager2: manager_sigma,
            contestant2: sigma,
        });
    }
    if mu < lo || at_lo {
        push_unique(list, CheatProfile {
            manager1: manager_sigma,
            contestant1: 0.0,
            manager2: manager_sigma,
            contestant2: 0.0,
        });
    }
}

/// Enumerates every generic equilibrium of the intention game.
///
/// With managers cheating (liability share above [`eta_hat`]), the menu is
/// all-cheat for an indifference point at or above 1, the two asymmetric
/// profiles plus a symmetric contestant mix on [1/2, 1], and managers-only
/// below 1/2. With managers clean the same structure repeats one level
/// down: both contestants cheat at or above 1/2, asymmetric plus mix on
/// [0, 1/2], and all-clean below 0.
///
/// Parameter points within tolerance of a threshold receive the menus of
/// both adjacent cases and the corresponding [`BoundaryFlags`] entry. The
/// manager-randomizing continuum at the liability threshold is non-generic
/// and deliberately not enumerated; its average cheating probabilities are
/// bracketed by the two menus that are returned.
pub fn enumerate_equilibria(params: &ModelParams) -> Result<EquilibriumSet, ModelError> {
    params.validate()?;

    let mu = mu_hat(params);
    let mut flags = BoundaryFlags::default();
    let (managers_cheat, managers_clean) = match eta_hat(params) {
        None => (true, false),
        Some(threshold) => {
            if near(params.liability_share, threshold) {
                flags.eta_at_threshold = true;
                (true, true)
            } else if params.liability_share > threshold {
                (true, false)
            } else {
                (false, true)
            }
        }
    };

    let mut equilibria = Vec::new();
    if managers_cheat {
        flags.mu_at_one |= near(mu, 1.0);
        flags.mu_at_half |= near(mu, 0.5);
        contestant_menu(&mut equilibria, 1.0, mu, 1.0, 0.5, 2.0 * mu - 1.0);
    }
    if managers_clean {
        flags.mu_at_half |= near(mu, 0.5);
        flags.mu_at_zero |= near(mu, 0.0);
        contestant_menu(&mut equilibria, 0.0, mu, 0.5, 0.0, 2.0 * mu);
    }

    let p_bar_low = equilibria
        .iter()
        .map(|e| e.avg_cheat_prob)
        .fold(f64::INFINITY, f64::min);
    let p_bar_high = equilibria
        .iter()
        .map(|e| e.avg_cheat_prob)
        .fold(f64::NEG_INFINITY, f64::max);

    Ok(EquilibriumSet { equilibria, p_bar_low, p_bar_high, boundary_flags: flags })
}

/// Lower bound of the theorem's scope: the expected fine that deters a fully
/// liable contestant, `r (delta - 1) / (2 (1 + delta))`.
pub fn theorem_scope_bound(delta: f64, revenue_share: f64) -> f64 {
    revenue_share * (delta - 1.0) / (2.0 * (1.0 + delta))
}

/// The knife-edge expected fine `(delta - 1) / (2 (1 + delta))` separating
/// the backfire range from the high-fine range.
pub fn knife_edge_pf(delta: f64) -> f64 {
    (delta - 1.0) / (2.0 * (1.0 + delta))
}

/// Classifies a parameter point by fine regime and manager regime.
pub fn classify_region(params: &ModelParams) -> RegionClass {
    let pf = params.pf_rel();
    let scope = theorem_scope_bound(params.delta, params.revenue_share);
    let knife = knife_edge_pf(params.delta);
    let fine_regime = if pf <= scope || near(pf, scope) {
        FineRegime::BelowTheoremScope
    } else if near(pf, knife) {
        FineRegime::KnifeEdge
    } else if pf > knife {
        FineRegime::HighFineRange
    } else {
        FineRegime::BackfireRange
    };
    let manager_regime = match manager_best_response(params) {
        BestResponse::Cheat => ManagerRegime::ManagersCheat,
        BestResponse::Indifferent => ManagerRegime::ManagersIndifferent,
        BestResponse::Clean => ManagerRegime::ManagersClean,
    };
    RegionClass { fine_regime, manager_regime, mu_hat: mu_hat(params) }
}

/// Analytic boundary curves of the region map, each mapping a liability
/// share to the expected fine that puts the point on the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionBoundaries {
    pub delta: f64,
    pub revenue_share: f64,
}

impl RegionBoundaries {
    pub fn new(delta: f64, revenue_share: f64) -> Result<Self, ModelError> {
        if !(delta.is_finite() && delta > 1.0) {
            return Err(ModelError::InvalidParameter {
                name: "delta",
                value: delta,
                constraint: "delta > 1",
            });
        }
        if !(revenue_share.is_finite() && revenue_share > 0.0 && revenue_share < 1.0) {
            return Err(ModelError::InvalidParameter {
                name: "revenue_share",
                value: revenue_share,
                constraint: "0 < revenue_share < 1",
            });
        }
        Ok(RegionBoundaries { delta, revenue_share })
    }

    /// Manager-indifference boundary:
    /// `pf(eta) = (delta - 1)(1 - r) / (2 (1 + delta)(1 - eta))`.
    /// Unbounded at full contestant liability, hence `None` at `eta = 1`.
    pub fn manager_curve(&self, eta: f64) -> Option<f64> {
        if eta >= 1.0 {
            return None;
        }
        Some(
            (self.delta - 1.0) * (1.0 - self.revenue_share)
                / (2.0 * (1.0 + self.delta) * (1.0 - eta)),
        )
    }

    /// Level curve where the contestant indifference point equals 1/2:
    /// `pf(eta) = r (delta - 1) / (2 (1 + delta) eta)`.
    pub fn mu_half_curve(&self, eta: f64) -> Option<f64> {
        if eta <= 0.0 {
            return None;
        }
        Some(theorem_scope_bound(self.delta, self.revenue_share) / eta)
    }

    /// Level curve where the contestant indifference point equals 0:
    /// `pf(eta) = r (3 delta + 1)(delta - 1) / (4 (1 + delta)^2 eta)`.
    pub fn mu_zero_curve(&self, eta: f64) -> Option<f64> {
        if eta <= 0.0 {
            return None;
        }
        Some(
            self.revenue_share * (3.0 * self.delta + 1.0) * (self.delta - 1.0)
                / (4.0 * (1.0 + self.delta).powi(2) * eta),
        )
    }

    /// Level curve where the contestant indifference point equals 1:
    /// `pf(eta) = r (delta - 1)(delta + 3) / (4 (1 + delta)^2 eta)`.
    pub fn mu_one_curve(&self, eta: f64) -> Option<f64> {
        if eta <= 0.0 {
            return None;
        }
        Some(
            self.revenue_share * (self.delta - 1.0) * (self.delta + 3.0)
                / (4.0 * (1.0 + self.delta).powi(2) * eta),
        )
    }

    /// The knife-edge fine level, constant in the liability share.
    pub fn knife_edge(&self) -> f64 {
        knife_edge_pf(self.delta)
    }
}

/// Convenience constructor for the four boundary curves.
pub fn region_boundaries(delta: f64, revenue_share: f64) -> Result<RegionBoundaries, ModelError> {
    RegionBoundaries::new(delta, revenue_share)
}
