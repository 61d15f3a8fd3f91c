//! The graded polynomial ring `k[x_1..x_N]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{MonomialOrder, OrderKind};

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: PrimeField,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(names: Vec<String>, field: PrimeField, order: MonomialOrder) -> Result<RingRef> {
        if names.is_empty() {
            return Err(Error::input("ring needs at least one variable"));
        }
        if order.precedence().len() != names.len() {
            return Err(Error::input("monomial order and variable list disagree in length"));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::input(format!("invalid variable name '{n}'")));
            }
            if names[..i].contains(n) {
                return Err(Error::input(format!("duplicate variable '{n}'")));
            }
        }
        Ok(Arc::new(Ring { names, field, order }))
    }

    /// `k[x,y,z]` over `F_32003` with grevlex.
    pub fn standard() -> RingRef {
        Self::with_vars(&["x", "y", "z"], PrimeField::default())
    }

    pub fn with_vars(names: &[&str], field: PrimeField) -> RingRef {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let n = names.len();
        Ring::new(names, field, MonomialOrder::new(OrderKind::Grevlex, n)).expect("valid ring")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring `k[X_1..X_N]` with uppercased names, used for inverse systems.
    pub fn dual(&self) -> RingRef {
        let names = self.names.iter().map(|n| n.to_uppercase()).collect();
        Ring::new(names, self.field, self.order.clone()).expect("dual of a valid ring")
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Ring::new(self.names.clone(), self.field, order)
    }
}
