namespace mfg { }
