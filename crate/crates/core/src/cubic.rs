//! Defining equations of cubic extensions of `k(x)`.

use alloc::format;
use alloc::string::String;

use crate::error::{bail, Result};
use crate::field::{Field, FieldElement};
use crate::ratfunc::RationalFunction;

/// `y^3 = beta`, or `y^3 = 3 c y + alpha`. In characteristic 2 the impure
/// equation reads `y^3 = c y + alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CubicModel {
    Pure { beta: RationalFunction },
    Impure { c: FieldElement, alpha: RationalFunction },
}

impl CubicModel {
    pub fn pure(beta: RationalFunction) -> Result<CubicModel> {
        if beta.is_zero() {
            bail!(Degenerate, "y^3 = 0");
        }
        Ok(CubicModel::Pure { beta })
    }

    pub fn impure(c: FieldElement, alpha: RationalFunction) -> Result<CubicModel> {
        if c.is_zero() {
            bail!(Degenerate, "c = 0 gives a pure model");
        }
        if c.field() != alpha.field() {
            return Err(crate::Error::FieldMismatch);
        }
        Ok(CubicModel::Impure { c, alpha })
    }

    /// `y^3 = 3 y + alpha`.
    pub fn standard(alpha: RationalFunction) -> Result<CubicModel> {
        let one = alpha.field().one();
        CubicModel::impure(one, alpha)
    }

    pub fn field(&self) -> &Field {
        match self {
            CubicModel::Pure { beta } => beta.field(),
            CubicModel::Impure { alpha, .. } => alpha.field(),
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self, CubicModel::Pure { .. })
    }

    /// Coefficient of `y` on the right-hand side (`3c`, or `c` in
    /// characteristic 2 where the two agree).
    pub fn linear_coefficient(&self) -> Option<FieldElement> {
        match self {
            CubicModel::Pure { .. } => None,
            CubicModel::Impure { c, .. } => Some(c * &self.field().from_i64(3)),
        }
    }

    pub fn equation(&self) -> String {
        match self {
            CubicModel::Pure { beta } => format!("y^3 = {beta}"),
            CubicModel::Impure { alpha, .. } => {
                let lin = self.linear_coefficient().expect("impure");
                format!("y^3 = {lin}*y + {alpha}")
            }
        }
    }
}

impl core::fmt::Display for CubicModel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.equation())
    }
}
