"""Tour of the social feature stack on hand-picked examples.

Shows the lexicon sentiment scorer (negation, boosters), the two-indicator
author bot score, and the TF-IDF near-duplicate coordination score.
"""

from datetime import date, datetime, time, timezone

from amrs import (AuthorStats, PostRecord, author_bot_score, combined_sentiment,
                  coordination_score, lexicon_sentiment)

print("=== lexicon sentiment ===")
for text in ["gme to the moon", "this is a scam stay away", "not good",
             "very good", "the chart shows a number"]:
    print(f"  {text!r:42s} -> {lexicon_sentiment(text):+.3f}")

print("\n=== blending with an auxiliary scorer (0.4 lexicon / 0.6 aux) ===")
print(f"  lexicon 0.0, aux 1.0       -> {combined_sentiment(0.0, 1.0):+.3f}")
print(f"  lexicon 1.0, aux missing   -> {combined_sentiment(1.0, None):+.3f}")

print("\n=== author bot scores (0.7 * high-frequency + 0.3 * low-diversity) ===")
profiles = [("casual lurker", 0.8, 5), ("single-sub regular", 2.0, 1),
            ("power poster", 14.0, 6), ("spam account", 22.0, 1)]
for name, ppd, diversity in profiles:
    total = int(ppd * 10)
    stats = AuthorStats(name, total, 10, total / 10, diversity)
    print(f"  {name:20s} {stats.posts_per_active_day:5.1f} posts/day, "
          f"{diversity} subreddits -> B = {author_bot_score(stats):.1f}")


def post(pid: str, text: str) -> PostRecord:
    return PostRecord(pid, "GME", datetime.combine(date(2021, 1, 25), time(12),
                                                   tzinfo=timezone.utc),
                      "author", "wallstreetbets", text)


print("\n=== coordination: fraction of near-duplicate pairs (cosine > 0.8) ===")
copypasta = "load up on gme diamond hands we squeeze the shorts to 1000"
organic = ["earnings report looks interesting this week",
           "thinking about selling my position soon",
           "what does the options chain say today"]
wave = [post(f"c{i}", copypasta) for i in range(4)] + \
       [post(f"o{i}", text) for i, text in enumerate(organic)]
print(f"  4 identical + 3 organic posts -> C = {coordination_score(wave):.3f}")
print(f"  organic posts only            -> C = "
      f"{coordination_score([post(f'o{i}', t) for i, t in enumerate(organic)]):.3f}")
