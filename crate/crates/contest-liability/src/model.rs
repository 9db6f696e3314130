//! Primitive game objects: parameters, cheating decisions, prize shares,
//! payoffs, and the closed-form effort solutions of the effort stage.
//!
//! Two teams compete in a share-prize contest. Each team has a contestant,
//! who exerts costly effort, and a manager, who does not. A team that cheats
//! has its effort scaled by an effectiveness factor `delta > 1` inside the
//! contest success function. Detected cheating costs a fine split between
//! contestant (`liability_share`) and manager (the remainder).
//!
//! Everything here is a pure function of its arguments; all mutable state
//! (audit draws, round records) lives in [`crate::sim`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute/relative tolerance for threshold comparisons on normalized
/// (prize = 1) quantities. The closed forms are exact for rational inputs,
/// so this only has to absorb float rounding.
pub const THRESHOLD_TOL: f64 = 1e-9;

/// `true` if `a` and `b` are equal within [`THRESHOLD_TOL`], measured
/// relative to the larger magnitude but never tighter than absolute.
pub fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= THRESHOLD_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Errors raised by the model layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("parameter {name} = {value} violates: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
    #[error("effort must be finite and non-negative, got {0}")]
    InvalidEffort(f64),
    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),
}

/// A cheating decision or intention: clean or cheat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheatDecision {
    Clean,
    Cheat,
}

impl CheatDecision {
    /// 0 for clean, 1 for cheat. Matches the on-disk encoding.
    pub fn as_bit(self) -> u8 {
        match self {
            CheatDecision::Clean => 0,
            CheatDecision::Cheat => 1,
        }
    }

    pub fn is_cheat(self) -> bool {
        self == CheatDecision::Cheat
    }
}

impl From<bool> for CheatDecision {
    fn from(cheat: bool) -> Self {
        if cheat {
            CheatDecision::Cheat
        } else {
            CheatDecision::Clean
        }
    }
}

/// One of the two competing teams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Team {
    One,
    Two,
}

impl Team {
    pub fn rival(self) -> Team {
        match self {
            Team::One => Team::Two,
            Team::Two => Team::One,
        }
    }

    /// 0 for team one, 1 for team two.
    pub fn index(self) -> usize {
        match self {
            Team::One => 0,
            Team::Two => 1,
        }
    }
}

/// Whether a player competes (contestant) or stays on the sidelines (manager).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RoleKind {
    Manager,
    Contestant,
}

/// A player position: one of the four (kind, team) combinations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Role {
    pub kind: RoleKind,
    pub team: Team,
}

impl Role {
    /// The four players in fixed order: m1, c1, m2, c2.
    pub const ALL: [Role; 4] = [
        Role { kind: RoleKind::Manager, team: Team::One },
        Role { kind: RoleKind::Contestant, team: Team::One },
        Role { kind: RoleKind::Manager, team: Team::Two },
        Role { kind: RoleKind::Contestant, team: Team::Two },
    ];

    /// Position in the canonical (m1, c1, m2, c2) ordering.
    pub fn index(self) -> usize {
        match (self.kind, self.team) {
            (RoleKind::Manager, Team::One) => 0,
            (RoleKind::Contestant, Team::One) => 1,
            (RoleKind::Manager, Team::Two) => 2,
            (RoleKind::Contestant, Team::Two) => 3,
        }
    }

    /// The other member of the same team.
    pub fn teammate(self) -> Role {
        let kind = match self.kind {
            RoleKind::Manager => RoleKind::Contestant,
            RoleKind::Contestant => RoleKind::Manager,
        };
        Role { kind, team: self.team }
    }

    pub fn label(self) -> &'static str {
        match (self.kind, self.team) {
            (RoleKind::Manager, Team::One) => "m1",
            (RoleKind::Contestant, Team::One) => "c1",
            (RoleKind::Manager, Team::Two) => "m2",
            (RoleKind::Contestant, Team::Two) => "c2",
        }
    }
}

/// The efforts exerted by the two contestants in one round.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EffortPair {
    pub team1: f64,
    pub team2: f64,
}

impl EffortPair {
    pub fn new(team1: f64, team2: f64) -> Result<Self, ModelError> {
        check_effort(team1)?;
        check_effort(team2)?;
        Ok(EffortPair { team1, team2 })
    }

    pub fn get(self, team: Team) -> f64 {
        match team {
            Team::One => self.team1,
            Team::Two => self.team2,
        }
    }
}

fn check_effort(e: f64) -> Result<f64, ModelError> {
    if e.is_finite() && e >= 0.0 {
        Ok(e)
    } else {
        Err(ModelError::InvalidEffort(e))
    }
}

/// The full parameter vector of the contest game.
///
/// The theory normalizes the prize to one; any `prize > 0` is accepted and
/// scales contest revenue and efforts without changing the equilibrium
/// structure, provided the fine is scaled along (see [`ModelParams::pf_rel`]).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Cheating effectiveness multiplier applied to a cheating team's effort
    /// inside the contest success function. Must exceed 1.
    pub delta: f64,
    /// Fraction of the team's prize share that goes to the contestant,
    /// strictly between 0 and 1. The manager receives the remainder.
    pub revenue_share: f64,
    /// Probability that an audit detects cheating, in [0, 1].
    pub audit_prob: f64,
    /// Fine charged to a team caught cheating, in the same unit as the prize.
    pub fine: f64,
    /// Fraction of the fine borne by the contestant, in [0, 1]. A value of 1
    /// is individual liability, anything below is joint liability.
    pub liability_share: f64,
    /// Total prize at stake, strictly positive.
    pub prize: f64,
}

impl ModelParams {
    pub fn new(
        delta: f64,
        revenue_share: f64,
        audit_prob: f64,
        fine: f64,
        liability_share: f64,
        prize: f64,
    ) -> Result<Self, ModelError> {
        let params = ModelParams {
            delta,
            revenue_share,
            audit_prob,
            fine,
            liability_share,
            prize,
        };
        params.validate()?;
        Ok(params)
    }

    /// Normalized parameter set with prize 1, unit audit probability, and the
    /// fine equal to the requested expected fine per unit of the prize.
    pub fn from_pf_rel(
        delta: f64,
        revenue_share: f64,
        liability_share: f64,
        pf_rel: f64,
    ) -> Result<Self, ModelError> {
        ModelParams::new(delta, revenue_share, 1.0, pf_rel, liability_share, 1.0)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        fn check(
            ok: bool,
            name: &'static str,
            value: f64,
            constraint: &'static str,
        ) -> Result<(), ModelError> {
            if ok {
                Ok(())
            } else {
                Err(ModelError::InvalidParameter { name, value, constraint })
            }
        }
        check(self.delta.is_finite() && self.delta > 1.0, "delta", self.delta, "delta > 1")?;
        check(
            self.revenue_share.is_finite() && self.revenue_share > 0.0 && self.revenue_share < 1.0,
            "revenue_share",
            self.revenue_share,
            "0 < revenue_share < 1",
        )?;
        check(
            self.audit_prob.is_finite() && (0.0..=1.0).contains(&self.audit_prob),
            "audit_prob",
            self.audit_prob,
            "0 <= audit_prob <= 1",
        )?;
        check(self.fine.is_finite() && self.fine >= 0.0, "fine", self.fine, "fine >= 0")?;
        check(
            self.liability_share.is_finite() && (0.0..=1.0).contains(&self.liability_share),
            "liability_share",
            self.liability_share,
            "0 <= liability_share <= 1",
        )?;
        check(self.prize.is_finite() && self.prize > 0.0, "prize", self.prize, "prize > 0")?;
        Ok(())
    }

    /// Expected fine per unit of the prize, `audit_prob * fine / prize`.
    /// Every threshold formula depends on the fine only through this scalar.
    pub fn pf_rel(&self) -> f64 {
        self.audit_prob * self.fine / self.prize
    }

    /// Expected fine in prize currency units, `audit_prob * fine`.
    pub fn expected_fine(&self) -> f64 {
        self.audit_prob * self.fine
    }

    /// The same game rescaled to prize 1 (fine scaled along, so `pf_rel` is
    /// unchanged).
    pub fn normalized(&self) -> ModelParams {
        ModelParams {
            fine: self.fine / self.prize,
            prize: 1.0,
            ..*self
        }
    }

    /// Effort effectiveness factor: 1 for a clean team, `delta` for a
    /// cheating team.
    pub fn effectiveness(&self, decision: CheatDecision) -> f64 {
        match decision {
            CheatDecision::Clean => 1.0,
            CheatDecision::Cheat => self.delta,
        }
    }

    /// Tullock share of the prize won by the own team.
    ///
    /// When both efforts are zero the share is the effectiveness ratio
    /// `theta_i / (theta_i + theta_j)`, so the two teams' shares always sum
    /// to one.
    pub fn prize_share(
        &self,
        own_effort: f64,
        rival_effort: f64,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> Result<f64, ModelError> {
        let e_i = check_effort(own_effort)?;
        let e_j = check_effort(rival_effort)?;
        let theta_i = self.effectiveness(own_decision);
        let theta_j = self.effectiveness(rival_decision);
        if e_i + e_j > 0.0 {
            Ok(theta_i * e_i / (theta_i * e_i + theta_j * e_j))
        } else {
            Ok(theta_i / (theta_i + theta_j))
        }
    }

    /// Contestant's expected payoff: revenue share of the prize, minus own
    /// effort, minus the expected fine share `d * p * f * eta`.
    ///
    /// Audit realization is deliberately absent here; [`crate::sim`] draws
    /// audits and charges realized fines.
    pub fn contestant_payoff(
        &self,
        own_effort: f64,
        rival_effort: f64,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> Result<f64, ModelError> {
        let share = self.prize_share(own_effort, rival_effort, own_decision, rival_decision)?;
        let fine = f64::from(own_decision.as_bit()) * self.expected_fine() * self.liability_share;
        Ok(self.revenue_share * self.prize * share - own_effort - fine)
    }

    /// Manager's expected payoff: the remainder of the team's prize share,
    /// minus the expected fine share `d * p * f * (1 - eta)`. No effort cost.
    pub fn manager_payoff(
        &self,
        own_effort: f64,
        rival_effort: f64,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> Result<f64, ModelError> {
        let share = self.prize_share(own_effort, rival_effort, own_decision, rival_decision)?;
        let fine = f64::from(own_decision.as_bit())
            * self.expected_fine()
            * (1.0 - self.liability_share);
        Ok((1.0 - self.revenue_share) * self.prize * share - fine)
    }

    /// Equilibrium effort of the effort stage, identical for both
    /// contestants: `prize * r * theta_i * theta_j / (theta_i + theta_j)^2`.
    ///
    /// Reduces to `prize * r / 4` in even contests (the effectiveness factors
    /// cancel) and `prize * r * delta / (1 + delta)^2` when exactly one team
    /// cheats. Independent of the liability split and the fine.
    pub fn equilibrium_effort(
        &self,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> f64 {
        let theta_i = self.effectiveness(own_decision);
        let theta_j = self.effectiveness(rival_decision);
        self.prize * self.revenue_share * theta_i * theta_j / (theta_i + theta_j).powi(2)
    }

    /// Best response of the own contestant to the rival's effort, from the
    /// first-order condition of the effort stage.
    ///
    /// Returns the interior solution
    /// `(sqrt(r * prize * e_j * theta_i * theta_j) - e_j * theta_j) / theta_i`
    /// clamped at zero; the clamp also covers `rival_effort = 0`, where no
    /// interior optimum exists.
    pub fn best_response_effort(
        &self,
        rival_effort: f64,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> Result<f64, ModelError> {
        let e_j = check_effort(rival_effort)?;
        let theta_i = self.effectiveness(own_decision);
        let theta_j = self.effectiveness(rival_decision);
        let interior =
            ((self.revenue_share * self.prize * e_j * theta_i * theta_j).sqrt() - e_j * theta_j)
                / theta_i;
        Ok(interior.max(0.0))
    }

    /// Signed difference between an observed effort and the subgame-perfect
    /// continuation effort for the realized cheating decisions. Positive
    /// means over-exertion.
    pub fn over_dissipation(
        &self,
        actual_effort: f64,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> f64 {
        actual_effort - self.equilibrium_effort(own_decision, rival_decision)
    }

    /// Contestant's continuation payoff when both contestants play the
    /// equilibrium efforts of the effort stage.
    pub fn contestant_continuation_payoff(
        &self,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> f64 {
        let effort = self.equilibrium_effort(own_decision, rival_decision);
        self.contestant_payoff(effort, effort, own_decision, rival_decision)
            .expect("equilibrium efforts are non-negative")
    }

    /// Manager's continuation payoff under equilibrium efforts.
    pub fn manager_continuation_payoff(
        &self,
        own_decision: CheatDecision,
        rival_decision: CheatDecision,
    ) -> f64 {
        let effort = self.equilibrium_effort(own_decision, rival_decision);
        self.manager_payoff(effort, effort, own_decision, rival_decision)
            .expect("equilibrium efforts are non-negative")
    }
}
