use std::fmt;
use std::path::Path;

use clap::ValueEnum;
use dthermo_core::{DeformationParams, IdealGas, Method, Oscillator, PowerLaw, SystemModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemKind {
    IdealGas,
    Oscillator,
    PowerLaw,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::IdealGas => "ideal-gas",
            SystemKind::Oscillator => "oscillator",
            SystemKind::PowerLaw => "power-law",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

/// Everything a sweep needs. Defaults are the deformed oscillator with
/// `β = β' = 0.01`, `ħ = ω = 2m = 1`, `T ∈ [0.1, 20]`, 60 points.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub system: SystemKind,
    pub beta: f64,
    pub beta_prime: f64,
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
    pub volume: f64,
    /// Power-law coefficient `α` in `H = α Pⁿ`.
    pub alpha: f64,
    /// Power-law exponent `n`.
    pub exponent: f64,
    /// Power-law dimension `D`.
    pub dim: usize,
    /// Power-law Jacobian growth `s` in `J = (1 + βP²)^s`.
    pub growth: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
    pub scale: Scale,
    pub methods: Vec<Method>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            system: SystemKind::Oscillator,
            beta: 0.01,
            beta_prime: 0.01,
            mass: 0.5,
            omega: 1.0,
            hbar: 1.0,
            volume: 1.0,
            alpha: 1.0,
            exponent: 2.0,
            dim: 3,
            growth: 0.0,
            t_min: 0.1,
            t_max: 20.0,
            points: 60,
            scale: Scale::Linear,
            methods: Method::ALL.to_vec(),
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64, String> {
    value
        .parse()
        .map_err(|_| format!("`{key}`: cannot parse `{value}` as a number"))
}

fn parse_usize(key: &str, value: &str) -> Result<usize, String> {
    value
        .parse()
        .map_err(|_| format!("`{key}`: cannot parse `{value}` as a non-negative integer"))
}

/// Comma-separated method list; `all` selects every method. The result is
/// deduplicated and in canonical order.
pub fn parse_methods(value: &str) -> Result<Vec<Method>, String> {
    let mut chosen = Vec::new();
    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("all") {
            chosen.extend(Method::ALL);
        } else {
            chosen.push(item.parse::<Method>()?);
        }
    }
    let methods: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|m| chosen.contains(m))
        .collect();
    if methods.is_empty() {
        return Err("no methods selected".to_string());
    }
    Ok(methods)
}

impl SweepConfig {
    /// Sets one field from its flag name (without the leading dashes).
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let value = value.trim();
        match key {
            "system" => self.system = SystemKind::from_str(value, true)?,
            "beta" => self.beta = parse_f64(key, value)?,
            "beta-prime" => self.beta_prime = parse_f64(key, value)?,
            "mass" => self.mass = parse_f64(key, value)?,
            "omega" => self.omega = parse_f64(key, value)?,
            "hbar" => self.hbar = parse_f64(key, value)?,
            "volume" => self.volume = parse_f64(key, value)?,
            "alpha" => self.alpha = parse_f64(key, value)?,
            "exponent" => self.exponent = parse_f64(key, value)?,
            "dim" => self.dim = parse_usize(key, value)?,
            "growth" => self.growth = parse_f64(key, value)?,
            "t-min" => self.t_min = parse_f64(key, value)?,
            "t-max" => self.t_max = parse_f64(key, value)?,
            "points" => self.points = parse_usize(key, value)?,
            "scale" => self.scale = Scale::from_str(value, true)?,
            "methods" => self.methods = parse_methods(value)?,
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }

    /// Applies a flat `key = value` file. Blank lines and `#` comments are
    /// ignored; keys are the long flag names, with `_` accepted for `-`.
    pub fn apply_file_contents(&mut self, text: &str) -> Result<(), String> {
        for (number, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", number + 1))?;
            let key = key.trim().replace('_', "-");
            self.set(&key, value)
                .map_err(|e| format!("line {}: {e}", number + 1))?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        self.apply_file_contents(&text)
            .map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.t_min.is_finite() && self.t_max.is_finite() && self.t_min > 0.0) {
            return Err("temperatures must be positive and finite".to_string());
        }
        if self.t_min >= self.t_max {
            return Err(format!(
                "t-min ({}) must be below t-max ({})",
                self.t_min, self.t_max
            ));
        }
        if self.points < 2 {
            return Err("points must be at least 2".to_string());
        }
        if self.methods.is_empty() {
            return Err("no methods selected".to_string());
        }
        if self.methods.contains(&Method::Quantum) && self.system != SystemKind::Oscillator {
            return Err(format!(
                "the quantum method needs the oscillator, not {}",
                self.system
            ));
        }
        self.deformation()?;
        self.system_model()?;
        Ok(())
    }

    pub fn deformation(&self) -> Result<DeformationParams, String> {
        DeformationParams::new(self.beta, self.beta_prime, self.hbar).map_err(|e| e.to_string())
    }

    pub fn system_model(&self) -> Result<SystemModel, String> {
        let model: SystemModel = match self.system {
            SystemKind::IdealGas => IdealGas {
                volume: self.volume,
                particles: 1.0,
                mass: self.mass,
            }
            .into(),
            SystemKind::Oscillator => Oscillator {
                mass: self.mass,
                omega: self.omega,
                particles: 1.0,
            }
            .into(),
            SystemKind::PowerLaw => PowerLaw {
                alpha: self.alpha,
                exponent: self.exponent,
                dim: self.dim,
                jacobian_growth: self.growth,
            }
            .into(),
        };
        model.validate().map_err(|e| e.to_string())?;
        Ok(model)
    }

    /// The sweep grid, endpoints included exactly.
    pub fn temperatures(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == last {
                    return self.t_max;
                }
                let f = i as f64 / last as f64;
                match self.scale {
                    Scale::Linear => self.t_min + f * (self.t_max - self.t_min),
                    Scale::Log => self.t_min * (self.t_max / self.t_min).powf(f),
                }
            })
            .collect()
    }
}
