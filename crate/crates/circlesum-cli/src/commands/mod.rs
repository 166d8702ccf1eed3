pub mod approx;
pub mod harmonics;
pub mod represent;
pub mod verify;
