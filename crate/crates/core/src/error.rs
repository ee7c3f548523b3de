use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("Bernoulli index n = {n} outside 1..={max}")]
    BernoulliRange { n: usize, max: usize },
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("a series needs at least one term")]
    NoTerms,
    #[error("radius {r} is not strictly inside the convergence radius {radius}")]
    OutsideRadius { r: f64, radius: f64 },
    #[error("coefficient lists too short: need {need}, have {have}")]
    TooShort { need: usize, have: usize },
    #[error("hypothesis violated: denominator coefficient c_{index} is not positive")]
    NonPositiveDenominator { index: usize },
}

/// Failure of a single interval or point operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("division by an enclosure containing zero")]
    Pole,
    #[error("argument outside the domain of {0}")]
    Domain(&'static str),
    #[error("{0} is not differentiable on an enclosure containing zero")]
    NotDifferentiable(&'static str),
}

/// Failure while evaluating an expression, with the offending subexpression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("pole in `{subexpr}`")]
    Pole { subexpr: String },
    #[error("domain error in `{subexpr}`: argument outside the domain of {func}")]
    Domain { subexpr: String, func: &'static str },
    #[error("`{subexpr}` is not differentiable here ({func})")]
    NotDifferentiable { subexpr: String, func: &'static str },
    #[error("removable singularity in `{subexpr}` could not be resolved")]
    Unresolved { subexpr: String },
}

impl EvalError {
    pub(crate) fn from_interval(e: IntervalError, subexpr: String) -> Self {
        match e {
            IntervalError::Pole => EvalError::Pole { subexpr },
            IntervalError::Domain(func) => EvalError::Domain { subexpr, func },
            IntervalError::NotDifferentiable(func) => EvalError::NotDifferentiable { subexpr, func },
        }
    }

    pub fn subexpr(&self) -> &str {
        match self {
            EvalError::Pole { subexpr }
            | EvalError::Domain { subexpr, .. }
            | EvalError::NotDifferentiable { subexpr, .. }
            | EvalError::Unresolved { subexpr } => subexpr,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<String>, found: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdent { offset: usize, name: String },
    #[error("invalid domain [{lo}, {hi}]: {reason}")]
    Domain { lo: String, hi: String, reason: &'static str },
    #[error("sharpness point {point} lies outside the domain")]
    SharpOutside { point: String },
    #[error("could not evaluate constant `{text}`: {reason}")]
    Constant { text: String, reason: String },
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("no catalog record with id `{0}`")]
    NotFound(String),
    #[error("record `{id}`: {source}")]
    Parse { id: String, source: ParseError },
    #[error("line {line}: {source}")]
    File { line: usize, source: ParseError },
    #[error("duplicate id `{0}`")]
    Duplicate(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertifyError {
    #[error("{source} on cell [{lo:e}, {hi:e}]")]
    Eval { source: EvalError, lo: f64, hi: f64 },
    #[error("no certified sign change on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },
    #[error("invalid domain [{lo}, {hi}]")]
    Domain { lo: f64, hi: f64 },
    #[error("certificate check failed: {0}")]
    Invalid(String),
}
