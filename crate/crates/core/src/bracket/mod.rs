mod brute;
mod cjones;
mod coef;
mod kauffman;
mod sweep;

use serde::{Deserialize, Serialize};

pub use brute::{bracket_bruteforce, bracket_bruteforce_with_stats};
pub use cjones::{
    colored_jones, colored_jones_cached, colored_jones_range, reduced_colored_jones,
    unknot_colored_jones, CableCache, CableStat, ColoredJones,
};
pub use kauffman::{kauffman_f, kauffman_lambda, KAUFFMAN_MAX_CROSSINGS};
pub use sweep::{bracket_sweep, bracket_sweep_with_stats, sweep_plan, SweepPlan};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::qalgebra::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Auto,
    Brute,
    Sweep,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Engine> {
        match s {
            "auto" => Ok(Engine::Auto),
            "brute" => Ok(Engine::Brute),
            "sweep" => Ok(Engine::Sweep),
            _ => Err(Error::Argument(format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EngineConfig {
    pub engine: Engine,
    pub brute_max_crossings: usize,
    pub sweep_max_width: usize,
    /// Worker threads; 0 means the rayon default.
    pub threads: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            engine: Engine::Auto,
            brute_max_crossings: 24,
            sweep_max_width: 26,
            threads: 0,
        }
    }
}

impl EngineConfig {
    pub fn with_engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.brute_max_crossings == 0 || self.sweep_max_width == 0 {
            return Err(Error::Argument("engine limits must be positive".into()));
        }
        Ok(())
    }
}

/// Work done by one bracket evaluation.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BracketStats {
    pub engine: String,
    pub crossings: usize,
    /// Brute force: states summed. Sweep: partial states processed over all steps.
    pub states_evaluated: u64,
    pub max_width: Option<usize>,
    /// Widest integer type the sweep needed.
    pub coefficient_type: Option<String>,
}

/// Kauffman bracket with `<O> = -A^2 - A^-2` and `<empty> = 1`, by the configured engine.
///
/// `auto` uses the sweep when its plan fits the width cap, else brute force.
pub fn bracket_with_stats(
    d: &LinkDiagram,
    cfg: &EngineConfig,
) -> Result<(LaurentPoly, BracketStats)> {
    cfg.validate()?;
    match cfg.engine {
        Engine::Brute => bracket_bruteforce_with_stats(d, cfg),
        Engine::Sweep => bracket_sweep_with_stats(d, cfg),
        Engine::Auto => {
            let plan = sweep_plan(&d.topo());
            if plan.max_width <= cfg.sweep_max_width || d.num_crossings() > cfg.brute_max_crossings
            {
                bracket_sweep_with_stats(d, cfg)
            } else {
                bracket_bruteforce_with_stats(d, cfg)
            }
        }
    }
}

pub fn bracket(d: &LinkDiagram, cfg: &EngineConfig) -> Result<LaurentPoly> {
    bracket_with_stats(d, cfg).map(|(p, _)| p)
}
