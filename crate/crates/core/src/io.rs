//! JSON interchange.
//!
//! Instance files, witness results, oracle reports and coefficient queries
//! all travel as JSON with rationals encoded as strings ("5/4" or "2").
//! Nothing is ever a binary float. Parse errors name the offending field.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::coeffs::{CoefficientSet, GammaResult};
use crate::error::{Error, Result};
use crate::geom::parse_rat;
use crate::mld::{Divisor, MldValue, OracleReport};
use crate::newton::{MonomialIdeal, RIdeal};
use crate::witness::{WitnessCase, WitnessResult};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorDto {
    pub exponent: String,
    pub generators: Vec<[u64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RIdealDto {
    pub factors: Vec<FactorDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceDto {
    pub rideal: RIdealDto,
    #[serde(
        rename = "declared_I",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub declared: Option<Vec<String>>,
}

/// A parsed instance: the R-ideal plus an optional declared coefficient set
/// that must contain every exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub rideal: RIdeal,
    pub declared: Option<CoefficientSet>,
}

impl Instance {
    pub fn new(rideal: RIdeal) -> Self {
        Instance {
            rideal,
            declared: None,
        }
    }

    /// The coefficient set the bounds are computed from: the declared set if
    /// present, otherwise the exponents themselves.
    pub fn coefficient_set(&self) -> Result<CoefficientSet> {
        match &self.declared {
            Some(set) => Ok(set.clone()),
            None => CoefficientSet::new(self.rideal.exponents()),
        }
    }
}

pub fn rideal_from_dto(dto: &RIdealDto) -> Result<RIdeal> {
    if dto.factors.is_empty() {
        return Err(Error::Parse("factors: must be nonempty".into()));
    }
    let mut factors = Vec::new();
    for (i, f) in dto.factors.iter().enumerate() {
        let exponent = parse_rat(&f.exponent)
            .map_err(|e| Error::Parse(format!("factors[{i}].exponent: {e}")))?;
        if !exponent.is_positive() {
            return Err(Error::Parse(format!(
                "factors[{i}].exponent: must be strictly positive"
            )));
        }
        if f.generators.is_empty() {
            return Err(Error::Parse(format!(
                "factors[{i}].generators: must be nonempty"
            )));
        }
        let ideal = MonomialIdeal::new(f.generators.iter().map(|g| (g[0], g[1])).collect())
            .map_err(|e| Error::Parse(format!("factors[{i}].generators: {e}")))?;
        factors.push((ideal, exponent));
    }
    RIdeal::new(factors).map_err(|e| Error::Parse(format!("factors: {e}")))
}

pub fn rideal_to_dto(rideal: &RIdeal) -> RIdealDto {
    RIdealDto {
        factors: rideal
            .factors()
            .iter()
            .map(|(ideal, e)| FactorDto {
                exponent: e.to_string(),
                generators: ideal.generators().iter().map(|&(x, y)| [x, y]).collect(),
            })
            .collect(),
    }
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let dto: InstanceDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance: {e}")))?;
    let rideal = rideal_from_dto(&dto.rideal)?;
    let declared = match &dto.declared {
        None => None,
        Some(raw) => {
            let mut values = Vec::new();
            for (i, s) in raw.iter().enumerate() {
                values
                    .push(parse_rat(s).map_err(|e| Error::Parse(format!("declared_I[{i}]: {e}")))?);
            }
            let set = CoefficientSet::new(values)
                .map_err(|e| Error::Parse(format!("declared_I: {e}")))?;
            for exponent in rideal.exponents() {
                if !set.contains(&exponent) {
                    return Err(Error::Parse(format!(
                        "declared_I: missing exponent {exponent}"
                    )));
                }
            }
            Some(set)
        }
    };
    Ok(Instance { rideal, declared })
}

pub fn instance_to_json(instance: &Instance) -> String {
    let dto = InstanceDto {
        rideal: rideal_to_dto(&instance.rideal),
        declared: instance
            .declared
            .as_ref()
            .map(|set| set.values().iter().map(|v| v.to_string()).collect()),
    };
    serde_json::to_string_pretty(&dto).expect("instance serialization cannot fail")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDto {
    pub mld: String,
    pub divisor: [u64; 2],
    pub logdisc: u64,
    pub bound: u64,
    pub case: String,
}

fn case_label(case: &WitnessCase) -> &'static str {
    match case {
        WitnessCase::One => "one",
        WitnessCase::Two { .. } => "two",
        WitnessCase::MinusInfinity { .. } => "minus-inf",
    }
}

pub fn witness_to_dto(w: &WitnessResult) -> WitnessDto {
    WitnessDto {
        mld: w.mld.to_string(),
        divisor: [w.divisor.x(), w.divisor.y()],
        logdisc: w.logdisc,
        bound: w.bound,
        case: case_label(&w.case).to_string(),
    }
}

pub fn witness_to_json(w: &WitnessResult) -> String {
    serde_json::to_string(&witness_to_dto(w)).expect("witness serialization cannot fail")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleDto {
    pub radius: u64,
    pub min_value: String,
    pub argmins: Vec<[u64; 2]>,
    pub any_negative: bool,
}

pub fn oracle_to_json(report: &OracleReport) -> String {
    let dto = OracleDto {
        radius: report.radius,
        min_value: report.min_value.to_string(),
        argmins: report.argmins.iter().map(|d| [d.x(), d.y()]).collect(),
        any_negative: report.any_negative,
    };
    serde_json::to_string(&dto).expect("oracle serialization cannot fail")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CoefficientsDto {
    #[serde(rename = "I")]
    values: Vec<String>,
}

pub fn coefficient_set_from_json(text: &str) -> Result<CoefficientSet> {
    let dto: CoefficientsDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("coefficients: {e}")))?;
    let mut values = Vec::new();
    for (i, s) in dto.values.iter().enumerate() {
        values.push(parse_rat(s).map_err(|e| Error::Parse(format!("I[{i}]: {e}")))?);
    }
    CoefficientSet::new(values).map_err(|e| Error::Parse(format!("I: {e}")))
}

pub fn coefficient_set_to_json(set: &CoefficientSet) -> String {
    let dto = CoefficientsDto {
        values: set.values().iter().map(|v| v.to_string()).collect(),
    };
    serde_json::to_string(&dto).expect("coefficient serialization cannot fail")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaDto {
    pub e: String,
    pub gamma: String,
    /// Multiplicities keyed by the rational string, ordered by key.
    pub witness: BTreeMap<String, u64>,
}

pub fn gamma_to_json(result: &GammaResult) -> String {
    let dto = GammaDto {
        e: result.e.to_string(),
        gamma: result.gamma.to_string(),
        witness: result
            .witness
            .iter()
            .map(|(v, c)| (v.to_string(), *c))
            .collect(),
    };
    serde_json::to_string(&dto).expect("gamma serialization cannot fail")
}

/// Expected values emitted next to generated family instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub mld: MldValue,
    pub witness: Divisor,
    pub minimal_logdisc: u64,
    pub bound: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedDto {
    pub mld: String,
    pub witness: [u64; 2],
    pub minimal_logdisc: u64,
    pub bound: u64,
}

pub fn mld_value_from_str(s: &str) -> Result<MldValue> {
    if s.trim() == "-inf" {
        return Ok(MldValue::MinusInfinity);
    }
    let value = parse_rat(s).map_err(|e| Error::Parse(format!("mld: {e}")))?;
    if value.is_negative() {
        return Err(Error::Parse(format!(
            "mld: finite values must be nonnegative, got {value}"
        )));
    }
    Ok(MldValue::Finite(value))
}

pub fn expected_from_json(text: &str) -> Result<Expected> {
    let dto: ExpectedDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("expected: {e}")))?;
    Ok(Expected {
        mld: mld_value_from_str(&dto.mld)?,
        witness: Divisor::new(dto.witness[0], dto.witness[1])
            .map_err(|e| Error::Parse(format!("witness: {e}")))?,
        minimal_logdisc: dto.minimal_logdisc,
        bound: dto.bound,
    })
}

pub fn expected_to_json(expected: &Expected) -> String {
    let dto = ExpectedDto {
        mld: expected.mld.to_string(),
        witness: [expected.witness.x(), expected.witness.y()],
        minimal_logdisc: expected.minimal_logdisc,
        bound: expected.bound,
    };
    serde_json::to_string_pretty(&dto).expect("expected serialization cannot fail")
}
