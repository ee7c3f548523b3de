pub mod catalog;
pub mod certify;
pub mod error;
pub mod expr;
pub mod hp;
pub mod interval;
pub mod jet;
pub mod prim;
pub mod scalar;
pub mod series;
