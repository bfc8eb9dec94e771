//! Angular units and the per-unit derivative scale.
//!
//! Trigonometric values do not depend on the unit an angle is quoted in, but
//! trigonometric *slopes* do: d(sin θ)/dθ = A·cos θ where A is the number of
//! radians per unit. Radians are the units that make A = 1, which is why they
//! are the natural measure for calculus.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

/// An angular unit: radians, degrees, or grads (1/400 of a turn).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AngleUnit {
    #[default]
    #[serde(rename = "rad", alias = "radians")]
    Radians,
    #[serde(rename = "deg", alias = "degrees")]
    Degrees,
    #[serde(rename = "grad", alias = "grads", alias = "gradians")]
    Grads,
}

impl AngleUnit {
    /// Radians per unit: the constant A in sin′θ = A·cos θ.
    ///
    /// Exactly 1 for radians, π/180 for degrees, π/200 for grads.
    pub fn scale(self) -> f64 {
        match self {
            AngleUnit::Radians => 1.0,
            AngleUnit::Degrees => PI / 180.0,
            AngleUnit::Grads => PI / 200.0,
        }
    }

    /// How many of this unit make one full turn (2π rad, 360°, 400 grads).
    ///
    /// The per-turn counts for degrees and grads are exact integers, so
    /// quotients of scales can be checked in exact arithmetic through this
    /// method: scale(a)/scale(b) = per_turn(b)/per_turn(a).
    pub fn units_per_turn(self) -> f64 {
        match self {
            AngleUnit::Radians => TAU,
            AngleUnit::Degrees => 360.0,
            AngleUnit::Grads => 400.0,
        }
    }

    /// Convert an angle quoted in this unit to radians.
    pub fn to_radians(self, angle: f64) -> f64 {
        self.scale() * angle
    }
}

impl fmt::Display for AngleUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AngleUnit::Radians => "rad",
            AngleUnit::Degrees => "deg",
            AngleUnit::Grads => "grad",
        })
    }
}

impl FromStr for AngleUnit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rad" | "radian" | "radians" => Ok(AngleUnit::Radians),
            "deg" | "degree" | "degrees" => Ok(AngleUnit::Degrees),
            "grad" | "grads" | "gradian" | "gradians" => Ok(AngleUnit::Grads),
            other => Err(format!("unknown angle unit `{other}` (expected rad, deg, or grad)")),
        }
    }
}
