//! Run configuration: one JSON document, optionally patched by `--set key=value`.

use nhent_core::band::{Boundary, LambdaParams, ModelParams};
use nhent_core::entanglement::EntropyPolicy;
use nhent_core::scaling::{field_model_params, FitWindow, SweepAxis};
use nhent_core::spin::{BdgConvention, TfimParams};
use nhent_core::C64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// Complex number as `[re, im]`.
pub type Cx = [f64; 2];

fn cx(z: Cx) -> C64 {
    C64::new(z[0], z[1])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum Model {
    Lambda {
        lambda: f64,
        w: Cx,
        v: Cx,
        u: Cx,
    },
    Raw {
        u: Cx,
        v1: Cx,
        v2: Cx,
        w1: Cx,
        w2: Cx,
    },
    Field {
        m: f64,
        r_h: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gap: Option<Cx>,
    },
    Tfim {
        j: f64,
        h: Cx,
        #[serde(default)]
        convention: Convention,
    },
    Yanglee {
        j: f64,
        h: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        kappa: Option<f64>,
    },
    Toy {
        kind: ToyKind,
        phi: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    #[default]
    Standard,
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ToyKind {
    Qubit,
    TwoQubit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryKind {
    #[default]
    Pbc,
    Apbc,
    Obc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum PolicyKind {
    Principal,
    Magnitude,
    #[default]
    Paired,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BandKind {
    Lower,
    #[default]
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Window {
    pub l_min: usize,
    pub l_max: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "axis", rename_all = "snake_case", deny_unknown_fields)]
pub enum Sweep {
    Cells {
        cells: Vec<usize>,
    },
    DeltaKappa {
        values: Vec<f64>,
    },
    RH {
        values: Vec<f64>,
    },
    Constrained {
        zeta: f64,
        invariant: f64,
        cells: Vec<usize>,
    },
}

/// Entanglement-spectrum probe: block size and the added quasiparticle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Probe {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subsystem: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasiparticle: Option<usize>,
    #[serde(default)]
    pub band: BandKind,
}

/// Yang–Lee PT-line settings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinOptions {
    #[serde(default = "default_line_sites")]
    pub line_sites: [usize; 3],
    #[serde(default = "default_fit_sites")]
    pub fit_sites: Vec<usize>,
}

impl Default for SpinOptions {
    fn default() -> Self {
        Self {
            line_sites: default_line_sites(),
            fit_sites: default_fit_sites(),
        }
    }
}

fn default_line_sites() -> [usize; 3] {
    [8, 10, 12]
}

fn default_fit_sites() -> Vec<usize> {
    vec![8, 10]
}

fn default_delta_kappa() -> f64 {
    1e-8
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: Model,
    /// Unit cells (band models) or sites (spin chains).
    pub cells: usize,
    #[serde(default)]
    pub boundary: BoundaryKind,
    #[serde(default = "default_delta_kappa")]
    pub delta_kappa: f64,
    #[serde(default)]
    pub policy: PolicyKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<Window>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Sweep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<Probe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin: Option<SpinOptions>,
    /// Payload path; stdout when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<String>,
}

impl RunConfig {
    pub fn from_value(v: Value) -> Result<Self, CliError> {
        serde_json::from_value(v).map_err(|e| CliError::ConfigInvalid(e.to_string()))
    }

    pub fn boundary(&self) -> Boundary {
        match self.boundary {
            BoundaryKind::Pbc => Boundary::Pbc,
            BoundaryKind::Apbc => Boundary::Apbc,
            BoundaryKind::Obc => Boundary::Obc,
        }
    }

    pub fn policy(&self) -> EntropyPolicy {
        match self.policy {
            PolicyKind::Principal => EntropyPolicy::Principal,
            PolicyKind::Magnitude => EntropyPolicy::Magnitude,
            PolicyKind::Paired => EntropyPolicy::Paired,
        }
    }

    pub fn window(&self) -> Option<FitWindow> {
        self.window.map(|w| FitWindow {
            l_min: w.l_min,
            l_max: w.l_max,
        })
    }

    /// Two-band Bloch couplings, if the model is one of the band families.
    pub fn band_params(&self) -> Option<ModelParams> {
        match self.model {
            Model::Lambda { lambda, w, v, u } => {
                Some(LambdaParams::new(lambda, cx(w), cx(v), cx(u)).model())
            }
            Model::Raw { u, v1, v2, w1, w2 } => {
                Some(ModelParams::new(cx(u), cx(v1), cx(v2), cx(w1), cx(w2)))
            }
            Model::Field { m, r_h, gap } => {
                let p = field_model_params(m, r_h);
                Some(gap.map_or(p, |g| p.with_gap(cx(g))))
            }
            _ => None,
        }
    }

    pub fn tfim(&self) -> Option<TfimParams> {
        match self.model {
            Model::Tfim { j, h, convention } => {
                Some(TfimParams::new(j, cx(h)).with_convention(match convention {
                    Convention::Standard => BdgConvention::Standard,
                    Convention::Printed => BdgConvention::Printed,
                }))
            }
            _ => None,
        }
    }

    pub fn sweep_axis(&self) -> Option<SweepAxis> {
        self.sweep.as_ref().map(|s| match s {
            Sweep::Cells { cells } => SweepAxis::Cells(cells.clone()),
            Sweep::DeltaKappa { values } => SweepAxis::DeltaKappa(values.clone()),
            Sweep::RH { values } => SweepAxis::Rh(values.clone()),
            Sweep::Constrained {
                zeta,
                invariant,
                cells,
            } => SweepAxis::Constrained {
                zeta: *zeta,
                invariant: *invariant,
                cells: cells.clone(),
            },
        })
    }
}

/// A run record is replaced by the config it embeds; anything else passes through.
pub fn unwrap_record(mut v: Value) -> Value {
    if v.get("tool").and_then(Value::as_str) == Some("nhent") {
        v.get_mut("config").map_or(Value::Null, Value::take)
    } else {
        v
    }
}

/// Sets `path` (dot-separated) in a JSON tree; the value is parsed as JSON, else taken as a string.
pub fn apply_override(root: &mut Value, assignment: &str) -> Result<(), CliError> {
    let (path, raw) = assignment.split_once('=').ok_or_else(|| {
        CliError::ConfigInvalid(format!("override `{assignment}` is not key=value"))
    })?;
    if path.is_empty() || path.split('.').any(str::is_empty) {
        return Err(CliError::ConfigInvalid(format!(
            "override key `{path}` is malformed"
        )));
    }
    let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_owned()));
    let mut node = root;
    for key in path.split('.') {
        if !node.is_object() {
            *node = Value::Object(Default::default());
        }
        node = node
            .as_object_mut()
            .expect("object")
            .entry(key)
            .or_insert(Value::Null);
    }
    *node = value;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> RunConfig {
        RunConfig {
            model: Model::Lambda {
                lambda: 1.0,
                w: [2.0, 0.0],
                v: [3.0, 0.0],
                u: [0.0, 1.0],
            },
            cells: 80,
            boundary: BoundaryKind::Pbc,
            delta_kappa: 1e-8,
            policy: PolicyKind::Paired,
            window: Some(Window {
                l_min: 20,
                l_max: 60,
            }),
            sweep: Some(Sweep::Constrained {
                zeta: 1.5,
                invariant: 0.1 / 3.0,
                cells: vec![40, 80],
            }),
            probe: Some(Probe {
                subsystem: Some(40),
                quasiparticle: None,
                band: BandKind::Upper,
            }),
            spin: None,
            out: Some("run/c2.csv".into()),
        }
    }

    #[test]
    fn round_trip_is_exact() {
        let c = sample();
        let text = serde_json::to_string(&c).unwrap();
        let back: RunConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let mut v = serde_json::to_value(sample()).unwrap();
        v["colour"] = json!("blue");
        assert!(RunConfig::from_value(v).is_err());
        let mut v = serde_json::to_value(sample()).unwrap();
        v["model"]["spin"] = json!(1);
        assert!(RunConfig::from_value(v).is_err());
    }

    #[test]
    fn overrides_patch_nested_keys() {
        let mut v = serde_json::to_value(sample()).unwrap();
        apply_override(&mut v, "cells=40").unwrap();
        apply_override(&mut v, "model.w=[1.5,0]").unwrap();
        apply_override(&mut v, "boundary=apbc").unwrap();
        let c = RunConfig::from_value(v).unwrap();
        assert_eq!(c.cells, 40);
        assert_eq!(c.boundary, BoundaryKind::Apbc);
        assert!(matches!(c.model, Model::Lambda { w: [1.5, 0.0], .. }));
        assert!(apply_override(&mut Value::Null, "novalue").is_err());
    }
}
