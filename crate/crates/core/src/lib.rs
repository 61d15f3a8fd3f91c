pub mod error;
pub mod field;
pub mod gb;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod hilbert;
pub mod ideal;
pub mod matrix;
pub mod resolve;
pub mod linkage;
pub mod families;
pub mod inverse;
pub mod verify;
pub mod cli;
