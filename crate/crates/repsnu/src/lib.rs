//! Exact computations in Deligne's category `Rep(S_ν)`, in the parabolic
//! category O of `gl(V)` for a mirabolic parabolic, and across the
//! Schur–Weyl functor relating them.

pub mod arith;
pub mod category_o;
pub mod character;
pub mod diagram;
pub mod deligne;
pub mod schur_weyl;
pub mod specialize;
pub mod tensor;
pub mod verify;
pub mod young;
