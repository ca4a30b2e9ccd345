//! Polynomials over ℚ and Gröbner-basis ideal operations.
//!
//! ```
//! use su3_groebner::{parse_poly, Budget, Ideal, MonomialOrder, Vars};
//!
//! let v = Vars::new(["x", "y"]);
//! let i = Ideal::new(&v, [parse_poly("x^2 - 1", &v).unwrap(), parse_poly("x*y - 1", &v).unwrap()]);
//! let gb = i.groebner(MonomialOrder::Lex, &Budget::default()).unwrap();
//! let shown: Vec<String> = gb.basis.iter().map(|p| p.to_string()).collect();
//! assert_eq!(shown, ["y^2 - 1", "x - y"]);
//! ```

mod budget;
mod engine;
mod ideal;
mod order;
mod parse;
mod poly;

pub use budget::{Budget, GroebnerError, Resource};
pub use engine::{groebner_basis, reduce_by, GbConfig, GbStats, Groebner};
pub use ideal::Ideal;
pub use order::MonomialOrder;
pub use parse::{parse_poly, parse_poly_list};
pub use poly::{rat, Mono, Poly, Vars};
