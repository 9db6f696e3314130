//! Two-team Tullock contest with cheating under individual or joint
//! liability: closed-form equilibrium analysis, brute-force verification,
//! and a Monte Carlo simulator of the two-stage protocol.
//!
//! Each team pairs a contestant, who exerts costly effort in a share-prize
//! contest, with a manager, who shares the revenue but not the effort cost.
//! Both members state a cheating intention; a uniform random dictator
//! implements one of them as the team decision. Cheating scales the team's
//! effort by `delta > 1` inside the contest success function and risks a
//! fine split between contestant and manager.
//!
//! Module map:
//!
//! * [`model`] — parameters, decisions, payoffs, and the closed-form effort
//!   solutions of the effort stage.
//! * [`equilibrium`] — indifference thresholds, best responses, full
//!   enumeration of the generic equilibria, and the region map of the
//!   (liability, fine) plane.
//! * [`oracle`] — independent brute-force checks: exhaustive pure-profile
//!   search, grid-based mixed-profile certification, effort-stage grid
//!   search, and randomized verification of the comparative-statics theorem.
//! * [`sim`] — seeded Monte Carlo execution of the full protocol with
//!   pluggable intention policies.
//! * [`sweep`] — parameter sweeps and the stable file formats behind the
//!   command-line interface.

pub mod equilibrium;
pub mod model;
pub mod oracle;
pub mod sim;
pub mod sweep;

pub use equilibrium::{
    classify_region, contestant_best_response, contestant_expected_payoffs, enumerate_equilibria,
    eta_hat, manager_best_response, manager_expected_payoffs, mu_hat, region_boundaries,
    BestResponse, BoundaryFlags, CheatProfile, Equilibrium, EquilibriumKind, EquilibriumSet,
    FineRegime, ManagerRegime, PayoffComparison, RegionBoundaries, RegionClass,
};
pub use model::{
    CheatDecision, EffortPair, ModelError, ModelParams, Role, RoleKind, Team, THRESHOLD_TOL,
};
pub use sim::{AgentPolicy, RoundRecord, SessionResult, Treatment, TreatmentPreset};
