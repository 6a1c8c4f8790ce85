pub struct FaithfulnessCertificate;
pub struct PeriodicityResult;
