//! Symbols and the declaration workspace.
//!
//! A [`Symbol`] is one of:
//!
//! * a **coordinate** — a chart variable; the declaration order inside a
//!   [`Context`] fixes the canonical variable ordering used for printing and
//!   monomial comparison (coordinates always precede non-coordinates);
//! * a **parameter** — a constant, optionally marked *nonzero* so that it may
//!   appear in denominators without a genericity caveat;
//! * an **opaque function derivative** — the `k`-th formal derivative of an
//!   undefined univariate function of one declared coordinate. Order 0 is
//!   the function itself; differentiation produces order `k + 1` on demand.
//!
//! Symbols compare structurally, so the `f''` produced by differentiating
//! twice equals the `f''` parsed from source text.

use crate::error::KernelError;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// What a symbol stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    /// Chart variable; `position` is its declaration index, which defines
    /// the canonical ordering among coordinates.
    Coordinate { position: u8 },
    /// Constant; `nonzero` marks parameters that are assumed invertible.
    Parameter { nonzero: bool },
    /// `order`-th derivative of an opaque univariate function whose single
    /// argument is the coordinate named `arg_name`.
    Opaque {
        order: u32,
        arg_name: Arc<str>,
        arg_position: u8,
    },
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct SymbolData {
    name: Arc<str>,
    kind: SymbolKind,
}

/// An interned symbol; cheap to clone, compares structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    data: Arc<SymbolData>,
}

impl Symbol {
    fn new(name: &str, kind: SymbolKind) -> Self {
        Symbol {
            data: Arc::new(SymbolData {
                name: Arc::from(name),
                kind,
            }),
        }
    }

    /// The base name (without primes or argument).
    pub fn name(&self) -> &str {
        &self.data.name
    }

    /// The symbol's kind.
    pub fn kind(&self) -> &SymbolKind {
        &self.data.kind
    }

    /// True for chart variables.
    pub fn is_coordinate(&self) -> bool {
        matches!(self.data.kind, SymbolKind::Coordinate { .. })
    }

    /// True for parameters (of either flavor).
    pub fn is_parameter(&self) -> bool {
        matches!(self.data.kind, SymbolKind::Parameter { .. })
    }

    /// True for parameters declared invertible.
    pub fn is_nonzero_parameter(&self) -> bool {
        matches!(self.data.kind, SymbolKind::Parameter { nonzero: true })
    }

    /// True for opaque function derivatives (any order, including 0).
    pub fn is_opaque(&self) -> bool {
        matches!(self.data.kind, SymbolKind::Opaque { .. })
    }

    /// Derivative order for opaque symbols, `None` otherwise.
    pub fn opaque_order(&self) -> Option<u32> {
        match &self.data.kind {
            SymbolKind::Opaque { order, .. } => Some(*order),
            _ => None,
        }
    }

    /// Argument coordinate name for opaque symbols, `None` otherwise.
    pub fn opaque_arg_name(&self) -> Option<&str> {
        match &self.data.kind {
            SymbolKind::Opaque { arg_name, .. } => Some(arg_name),
            _ => None,
        }
    }

    /// The coordinate symbol an opaque function is a function of.
    pub fn opaque_arg(&self) -> Option<Symbol> {
        match &self.data.kind {
            SymbolKind::Opaque {
                arg_name,
                arg_position,
                ..
            } => Some(Symbol::new(
                arg_name,
                SymbolKind::Coordinate {
                    position: *arg_position,
                },
            )),
            _ => None,
        }
    }

    /// For an opaque symbol, the symbol one derivative order higher.
    ///
    /// Panics when applied to a non-opaque symbol; the polynomial layer only
    /// calls it on opaque variables.
    pub(crate) fn opaque_derivative(&self) -> Symbol {
        match &self.data.kind {
            SymbolKind::Opaque {
                order,
                arg_name,
                arg_position,
            } => Symbol::new(
                self.name(),
                SymbolKind::Opaque {
                    order: order + 1,
                    arg_name: arg_name.clone(),
                    arg_position: *arg_position,
                },
            ),
            _ => panic!("opaque_derivative on non-opaque symbol `{}`", self),
        }
    }

    /// The order-0 twin of an opaque symbol (the function itself).
    pub fn opaque_base(&self) -> Option<Symbol> {
        match &self.data.kind {
            SymbolKind::Opaque {
                arg_name,
                arg_position,
                ..
            } => Some(Symbol::new(
                self.name(),
                SymbolKind::Opaque {
                    order: 0,
                    arg_name: arg_name.clone(),
                    arg_position: *arg_position,
                },
            )),
            _ => None,
        }
    }

    /// Canonical ordering key: coordinates first (by declaration position),
    /// then everything else alphabetically; derivative orders ascend. The
    /// trailing fields only break ties between structurally distinct symbols
    /// that happen to share a name, keeping `Ord` consistent with `Eq`.
    fn sort_key(&self) -> (u8, u8, &str, u32, u8, &str, u8) {
        match &self.data.kind {
            SymbolKind::Coordinate { position } => (0, *position, self.name(), 0, 0, "", 0),
            SymbolKind::Parameter { nonzero } => {
                (1, 0, self.name(), 0, 1 + u8::from(*nonzero), "", 0)
            }
            SymbolKind::Opaque {
                order,
                arg_name,
                arg_position,
            } => (1, 0, self.name(), *order, 3, arg_name, *arg_position),
        }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Symbol {
    /// `q` for coordinates and parameters; `f''(p)` for opaque derivatives.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.data.kind {
            SymbolKind::Opaque {
                order, arg_name, ..
            } => {
                write!(f, "{}", self.name())?;
                for _ in 0..*order {
                    write!(f, "'")?;
                }
                write!(f, "({arg_name})")
            }
            _ => write!(f, "{}", self.name()),
        }
    }
}

/// Name used by the built-in quadratic constant; not declarable.
pub(crate) const SQRT2_NAME: &str = "sqrt2";

/// A declaration workspace: the set of named symbols an expression may use.
///
/// Coordinates are ordered by declaration; parse with [`Context::parse`]
/// (see the `parse` module) against the declarations made here.
#[derive(Debug, Default, Clone)]
pub struct Context {
    by_name: BTreeMap<String, Symbol>,
    chart: Vec<Symbol>,
}

impl Context {
    /// An empty workspace.
    pub fn new() -> Self {
        Self::default()
    }

    fn declare(&mut self, name: &str, kind: SymbolKind) -> Result<Symbol, KernelError> {
        if name == SQRT2_NAME {
            return Err(KernelError::ReservedName(name.to_string()));
        }
        if self.by_name.contains_key(name) {
            return Err(KernelError::DuplicateSymbol(name.to_string()));
        }
        let sym = Symbol::new(name, kind);
        self.by_name.insert(name.to_string(), sym.clone());
        Ok(sym)
    }

    /// Declare the next coordinate of the chart.
    pub fn coordinate(&mut self, name: &str) -> Result<Symbol, KernelError> {
        let position = u8::try_from(self.chart.len()).expect("chart too large");
        let sym = self.declare(name, SymbolKind::Coordinate { position })?;
        self.chart.push(sym.clone());
        Ok(sym)
    }

    /// Declare several coordinates at once, in chart order.
    pub fn coordinates(&mut self, names: &[&str]) -> Result<Vec<Symbol>, KernelError> {
        names.iter().map(|n| self.coordinate(n)).collect()
    }

    /// Declare a parameter with no invertibility assumption.
    pub fn parameter(&mut self, name: &str) -> Result<Symbol, KernelError> {
        self.declare(name, SymbolKind::Parameter { nonzero: false })
    }

    /// Declare a parameter assumed nonzero (safe in denominators).
    pub fn nonzero_parameter(&mut self, name: &str) -> Result<Symbol, KernelError> {
        self.declare(name, SymbolKind::Parameter { nonzero: true })
    }

    /// Declare an opaque univariate function of the given coordinate.
    /// The returned symbol is the function itself (derivative order 0).
    pub fn opaque_function(&mut self, name: &str, arg: &Symbol) -> Result<Symbol, KernelError> {
        let (arg_name, arg_position) = match arg.kind() {
            SymbolKind::Coordinate { position } => (Arc::from(arg.name()), *position),
            _ => return Err(KernelError::NotACoordinate(arg.name().to_string())),
        };
        self.declare(
            name,
            SymbolKind::Opaque {
                order: 0,
                arg_name,
                arg_position,
            },
        )
    }

    /// Look up a declared symbol by name.
    pub fn get(&self, name: &str) -> Option<&Symbol> {
        self.by_name.get(name)
    }

    /// The declared coordinates in chart order.
    pub fn chart(&self) -> &[Symbol] {
        &self.chart
    }
}
