//! Exact combinatorics of simple modules over type A quantum affine
//! algebras, as seen through their Drinfeld polynomials: q-factorizations,
//! pseudo q-factorization graphs, snakes, maximal totally ordered
//! subgraphs and prime factorizations.
//!
//! ```
//! use qfact_core::{parse_polynomial, prime_factorize_small, Route};
//!
//! let p = parse_polynomial("A3; w[1,3]^2 w[2,0]").unwrap();
//! let result = prime_factorize_small(&p).unwrap();
//! assert_eq!(result.status, Route::SnakeSupportRoute);
//! assert_eq!(result.factors.len(), 2);
//! ```

pub mod decomp;
pub mod dynkin;
pub mod error;
pub mod graph;
pub mod qfact;
pub mod reducibility;
pub mod snake;
pub mod text;
pub mod weights;

pub use decomp::{
    all_mtos_quochains, alternating_line, check_factorization, count_mtos_quochains, enumerate_mtos, is_mtos_quochain,
    mtos_quochain, mtos_quochain_forms, prime_factorize_small, prime_factorize_snake_support, quochains_isomorphic,
    three_vertex_prime_check, unique_mtos_decomposition, AlternatingLine, FactorizationResult, LineConditions,
    Multicut, QuochainForm, Route, DEFAULT_QUOCHAIN_BOUND,
};
pub use dynkin::{DynkinA, Subdiagram};
pub use error::{Error, Result};
pub use graph::{PQGraph, Reachability, VertexId};
pub use qfact::{fuse, in_special_position, is_q_factorization, q_factorization, Fusion, QString};
pub use reducibility::{hlw_first, is_reducible_pair, red_set, special_set, RedSet};
pub use snake::{
    has_snake_support, in_prime_snake_position, in_snake_position, is_prime_snake, is_prime_snake_polynomial, is_snake,
    is_snake_polynomial, monochromatic_equivalence_report, segment_check, segment_poly, EquivalenceReport, Segment,
    Snake,
};
pub use text::parse_polynomial;
pub use weights::{product, DrinfeldPolynomial, FundamentalWeight, KrFactor};
