pub struct BoxSet;
pub struct IntervalBranchingSystem;
pub struct Map1d;
pub struct PiecewiseMap;
pub struct RectBox;
pub struct RnDerivative;
