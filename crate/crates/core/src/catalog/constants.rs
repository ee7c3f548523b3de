//! Named constants of the catalog and the parser environment built from them.

use std::sync::OnceLock;

use super::Citation;
use crate::error::CatalogError;
use crate::expr::{eval_interval, parse_expr_with, ConstEnv, Expr, NamedConst};
use crate::interval::Interval;

/// A best-possible constant with its printed decimal value.
#[derive(Clone, Debug)]
pub struct ConstantRecord {
    pub id: &'static str,
    /// Identifier usable in the expression language.
    pub name: &'static str,
    pub definition: &'static str,
    pub reference: f64,
    /// Largest accepted `|value - reference|`.
    pub tolerance: f64,
    pub citation: Citation,
    pub note: Option<&'static str>,
}

pub const CONSTANTS: &[ConstantRecord] = &[
    ConstantRecord {
        id: "const_alpha",
        name: "alpha",
        definition: "pi/(pi - 2)",
        reference: 2.75194,
        tolerance: 1e-5,
        citation: Citation { label: "thm1", quote: r"\alpha=\pi/(\pi-2)\approx 2.75194" },
        note: None,
    },
    ConstantRecord {
        id: "const_k",
        name: "k",
        definition: "(pi/2)^alpha",
        reference: 3.46505,
        tolerance: 1e-5,
        citation: Citation { label: "lem1202", quote: r"k=(\pi/2)^\alpha \approx 3.46505" },
        note: None,
    },
    ConstantRecord {
        id: "const_alpha1",
        name: "alpha1",
        definition: "log(pi)/log(3)",
        reference: 1.04198,
        tolerance: 1e-5,
        citation: Citation { label: "thm2201", quote: r"\alpha_1=\log(\pi)/\log (3)\approx 1.04198" },
        note: None,
    },
    ConstantRecord {
        id: "const_alpha2",
        name: "alpha2",
        definition: "log(6/pi)/log(2)",
        reference: 0.93345,
        tolerance: 1e-5,
        citation: Citation { label: "thm2201", quote: r"\alpha_2=\log(\pi/6)/\log (2)" },
        note: Some(
            "stated as log(pi/6)/log 2, which is negative; stored as log(6/pi)/log 2 to match the proof \
             (6/pi = 2^alpha2). The value 0.933466 differs from the printed 0.93345 by 1.6e-5",
        ),
    },
    ConstantRecord {
        id: "const_thm2702_alpha",
        name: "alpha_exp",
        definition: "(pi^2 + 8*log(2/pi) - 2*pi)/8",
        reference: -0.00328,
        tolerance: 1e-5,
        citation: Citation { label: "2702", quote: r"\alpha=(\pi^2+8\log(2/\pi)-2\pi)/8\approx -0.00328" },
        note: None,
    },
];

fn build() -> ConstEnv {
    let mut env = ConstEnv::new();
    for c in CONSTANTS {
        let definition = parse_expr_with(c.definition, &env).expect("built-in constant parses");
        let enclosure = eval_interval(&definition, &Interval::ZERO).expect("built-in constant evaluates");
        env.insert(NamedConst { name: c.name.to_string(), definition, enclosure });
    }
    env
}

/// Parser environment holding every built-in constant.
pub fn env() -> &'static ConstEnv {
    static ENV: OnceLock<ConstEnv> = OnceLock::new();
    ENV.get_or_init(build)
}

pub fn get_constant(id: &str) -> Result<&'static ConstantRecord, CatalogError> {
    CONSTANTS.iter().find(|c| c.id == id || c.name == id).ok_or_else(|| CatalogError::NotFound(id.to_string()))
}

/// Rigorous enclosure of a constant given by record id or DSL name.
pub fn resolve_constant(id: &str) -> Result<Interval, CatalogError> {
    let c = get_constant(id)?;
    Ok(env().get(c.name).expect("constant registered").enclosure)
}

/// The parsed definition of a constant.
pub fn definition(id: &str) -> Result<Expr, CatalogError> {
    let c = get_constant(id)?;
    Ok(env().get(c.name).expect("constant registered").definition.clone())
}

impl ConstantRecord {
    /// The enclosure and the largest `|v - reference|` over it.
    pub fn deviation(&self) -> (Interval, f64) {
        let enc = resolve_constant(self.id).expect("built-in");
        let d = (enc.lo() - self.reference).abs().max((enc.hi() - self.reference).abs());
        (enc, d)
    }

    pub fn matches_reference(&self) -> bool {
        self.deviation().1 <= self.tolerance
    }
}
