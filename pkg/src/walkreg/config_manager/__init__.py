from .config_manager import AnalysisConfig, ConfigManager, load_config

__all__ = ["AnalysisConfig", "ConfigManager", "load_config"]
