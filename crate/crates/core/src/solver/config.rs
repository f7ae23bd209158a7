use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// How the reinforcement amount Δτ is chosen each iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReinforcementMode {
    /// Fixed deposit of 1 on the iteration-best clique.
    #[serde(alias = "aco_binary")]
    Binary,
    /// `1 / (1 + |global best size - iteration best size|)`; the plain ACO baseline.
    #[serde(alias = "aco_quality_gap")]
    QualityGap,
    /// Δτ driven by a one-dimensional particle swarm update.
    #[serde(alias = "aco_pso")]
    Pso,
}

impl ReinforcementMode {
    pub const ALL: [Self; 3] = [Self::Pso, Self::QualityGap, Self::Binary];

    /// Name used by the benchmark harness and the CLI.
    pub fn algorithm_name(self) -> &'static str {
        match self {
            Self::Binary => "aco_binary",
            Self::QualityGap => "aco_quality_gap",
            Self::Pso => "aco_pso",
        }
    }
}

impl fmt::Display for ReinforcementMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.algorithm_name())
    }
}

impl FromStr for ReinforcementMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "aco_pso" | "pso" | "aco-pso" => Ok(Self::Pso),
            "aco_quality_gap" | "quality_gap" | "aco" => Ok(Self::QualityGap),
            "aco_binary" | "binary" => Ok(Self::Binary),
            other => Err(format!(
                "unknown algorithm `{other}` (expected aco_pso, aco_quality_gap or aco_binary)"
            )),
        }
    }
}

/// Reading of the evaporation parameter ρ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evaporation {
    /// τ ← (1 − ρ)·τ
    Literal,
    /// τ ← ρ·τ, i.e. ρ is the fraction of trail kept.
    Persistence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaMode {
    /// Stepped schedule 1, 2, 3, 4 over iterations (see [`super::alpha_schedule`]).
    Scheduled,
    /// Constant `alpha` from the config.
    Fixed,
}

/// Every tunable of a solver run. Defaults are the reference settings:
/// 30 ants, 1000 iterations, ρ₀ = 0.95, φ = 0.0002, τ ∈ [0.01, 6],
/// c1 = c3 = 0.3, c2 = 1 − c1, Δτ₀ = V₀ = 0.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    pub ants: usize,
    pub iterations: usize,
    pub rho0: f64,
    pub phi: f64,
    pub delta_tau_initial: f64,
    pub tau_min: f64,
    pub tau_max: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub v_initial: f64,
    pub alpha_schedule: AlphaMode,
    /// Exponent used when `alpha_schedule = "fixed"`.
    pub alpha: f64,
    pub reinforcement_mode: ReinforcementMode,
    pub evaporation: Evaporation,
    pub seed: u64,
    /// Build the ants of one iteration on the rayon pool. Results do not
    /// depend on this flag.
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            ants: 30,
            iterations: 1000,
            rho0: 0.95,
            phi: 0.0002,
            delta_tau_initial: 0.0,
            tau_min: 0.01,
            tau_max: 6.0,
            c1: 0.3,
            c2: 0.7,
            c3: 0.3,
            v_initial: 0.0,
            alpha_schedule: AlphaMode::Scheduled,
            alpha: 1.0,
            reinforcement_mode: ReinforcementMode::Pso,
            evaporation: Evaporation::Literal,
            seed: 0,
            parallel: false,
        }
    }
}

impl SolverConfig {
    pub fn with_mode(mut self, mode: ReinforcementMode) -> Self {
        self.reinforcement_mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_iterations(mut self, iterations: usize) -> Self {
        self.iterations = iterations;
        self
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let fail = |msg: String| Err(ConfigError::Invalid(msg));
        let reals = [
            ("rho0", self.rho0),
            ("phi", self.phi),
            ("delta_tau_initial", self.delta_tau_initial),
            ("tau_min", self.tau_min),
            ("tau_max", self.tau_max),
            ("c1", self.c1),
            ("c2", self.c2),
            ("c3", self.c3),
            ("v_initial", self.v_initial),
            ("alpha", self.alpha),
        ];
        if let Some((name, _)) = reals.iter().find(|(_, x)| !x.is_finite()) {
            return fail(format!("{name} must be finite"));
        }
        if self.ants == 0 {
            return fail("ants must be at least 1".into());
        }
        if self.iterations == 0 {
            return fail("iterations must be at least 1".into());
        }
        if !(self.rho0 > 0.0 && self.rho0 <= super::RHO_CAP) {
            return fail(format!(
                "rho0 must lie in (0, {}], got {}",
                super::RHO_CAP,
                self.rho0
            ));
        }
        if !(0.0..1.0).contains(&self.phi) {
            return fail(format!("phi must lie in [0, 1), got {}", self.phi));
        }
        if self.c1 < 0.0 || self.c2 < 0.0 || self.c3 < 0.0 {
            return fail("c1, c2 and c3 must be non-negative".into());
        }
        if self.tau_min < 0.0 || self.tau_min >= self.tau_max {
            return fail(format!(
                "need 0 <= tau_min < tau_max, got [{}, {}]",
                self.tau_min, self.tau_max
            ));
        }
        if self.delta_tau_initial < 0.0 {
            return fail("delta_tau_initial must be non-negative".into());
        }
        if self.alpha_schedule == AlphaMode::Fixed && self.alpha <= 0.0 {
            return fail("fixed alpha must be positive".into());
        }
        Ok(())
    }

    /// Parse a flat `key = value` document. Missing keys keep their defaults.
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        let cfg: Self = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Apply a partial override table on top of this config.
    pub fn patched(&self, patch: &toml::Table) -> Result<Self, ConfigError> {
        let mut table = toml::Table::try_from(self).expect("config serializes");
        for (k, v) in patch {
            table.insert(k.clone(), v.clone());
        }
        let cfg: Self = table.try_into()?;
        cfg.validate()?;
        Ok(cfg)
    }
}
