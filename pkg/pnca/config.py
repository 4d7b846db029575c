from __future__ import annotations

import os
try:
    from dotenv import load_dotenv
    load_dotenv()
except Exception:
    pass


class Settings:
    LOG_LEVEL = os.getenv("PNCA_LOG_LEVEL", "WARNING").strip().upper()
    # verify-paper / 測試資料用的預設亂數種子
    SEED = int(os.getenv("PNCA_SEED", "20090601"))
    # cycles 預設 worker 數；1 = 單行程
    THREADS = max(1, int(os.getenv("PNCA_THREADS", "1")))
    OUTPUT_INDENT = int(os.getenv("PNCA_OUTPUT_INDENT", "2"))

    def log_level(self, override: str | None = None) -> str:
        return (override or self.LOG_LEVEL or "WARNING").upper()


settings = Settings()
