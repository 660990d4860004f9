"""Manipulation-risk scoring for tickers from fused social and market signals."""

from .bots import BotParams, author_bot_score, daily_bot_aggregates
from .coordination import CoordinationParams, coordination_score, tfidf_vectors
from .evaluation import forward_walk, join_log_with_labels, lead_time, threshold_sweep
from .fusion import fuse, fuse_posts
from .market import RollingParams, compute_return, market_feature_table, rolling_volume_stats
from .metrics import MetricsReport, confusion_and_metrics, pr_auc, roc_auc, spearman_rho
from .scoring import (NormalizerState, SuspicionParams, WeightConfig, amrs,
                      market_component, normalize_expanding, risk_level,
                      score_pipeline, tag_suspicious)
from .sentiment import (LexiconScorer, SentimentWeights, combined_sentiment,
                        lexicon_sentiment, load_lexicon)
from .social import aggregate_social_day, apply_lexicon_scores
from .synthetic import EventWindow, SyntheticScenarioConfig, generate_synthetic_social
from .types import (AuthorStats, DailyMarketFeatures, DailySocialFeatures,
                    ForwardEvalRow, FusedWindow, GroundTruthLabel, LeadTimeRecord,
                    OhlcvBar, PostRecord, PredictionLogEntry, RiskLevel, ScoredWindow)

__version__ = "0.1.0"

__all__ = [
    "AuthorStats", "BotParams", "CoordinationParams", "DailyMarketFeatures",
    "DailySocialFeatures", "EventWindow", "ForwardEvalRow", "FusedWindow",
    "GroundTruthLabel", "LeadTimeRecord", "LexiconScorer", "MetricsReport",
    "NormalizerState", "OhlcvBar", "PostRecord", "PredictionLogEntry",
    "RiskLevel", "RollingParams", "ScoredWindow", "SentimentWeights",
    "SuspicionParams", "SyntheticScenarioConfig", "WeightConfig",
    "aggregate_social_day", "amrs", "apply_lexicon_scores", "author_bot_score",
    "combined_sentiment", "compute_return", "confusion_and_metrics",
    "coordination_score", "daily_bot_aggregates", "forward_walk", "fuse",
    "fuse_posts", "generate_synthetic_social", "join_log_with_labels",
    "lead_time", "lexicon_sentiment", "load_lexicon", "market_component",
    "market_feature_table", "normalize_expanding", "pr_auc", "risk_level",
    "roc_auc", "rolling_volume_stats", "score_pipeline", "spearman_rho",
    "tag_suspicious", "threshold_sweep", "tfidf_vectors",
]
