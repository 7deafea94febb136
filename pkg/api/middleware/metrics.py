"""
Prometheus metrics middleware
"""
import re
import time

from fastapi import Request
from prometheus_client import CONTENT_TYPE_LATEST, Counter, Gauge, Histogram, generate_latest
from starlette.middleware.base import BaseHTTPMiddleware
from starlette.responses import Response

from services.logger import get_logger

logger = get_logger(__name__)

# Define metrics
REQUEST_COUNT = Counter(
    'http_requests_total',
    'Total HTTP requests',
    ['method', 'endpoint', 'status']
)

REQUEST_DURATION = Histogram(
    'http_request_duration_seconds',
    'HTTP request duration in seconds',
    ['method', 'endpoint'],
    buckets=[0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0, 120.0]
)

REQUEST_IN_PROGRESS = Gauge(
    'http_requests_in_progress',
    'Number of HTTP requests in progress',
    ['method', 'endpoint']
)

ORACLE_GRAPHS_EXAMINED = Counter(
    'oracle_graphs_examined_total',
    'Graph classes enumerated by exact searches',
    ['problem']
)

ORACLE_DURATION = Histogram(
    'oracle_search_duration_seconds',
    'Exact search duration in seconds',
    ['problem'],
    buckets=[0.1, 1.0, 5.0, 30.0, 120.0, 600.0, 1800.0]
)

CONSTRUCTIONS_BUILT = Counter(
    'constructions_built_total',
    'Constructions built through the API',
    ['name', 'verified']
)

CHECKS_RUN = Counter(
    'singular_checks_total',
    'Singular-copy and WORM checks',
    ['kind', 'outcome']
)


class PrometheusMetricsMiddleware(BaseHTTPMiddleware):
    """Middleware to collect Prometheus metrics"""

    async def dispatch(self, request: Request, call_next):
        if request.url.path == "/metrics":
            return await call_next(request)

        endpoint = self._get_endpoint_pattern(request.url.path)
        method = request.method
        REQUEST_IN_PROGRESS.labels(method=method, endpoint=endpoint).inc()
        start_time = time.time()

        try:
            response = await call_next(request)
            status_code = response.status_code
        except Exception as e:
            logger.error("request_processing_error", error=str(e))
            status_code = 500
            raise
        finally:
            duration = time.time() - start_time
            REQUEST_COUNT.labels(method=method, endpoint=endpoint, status=status_code).inc()
            REQUEST_DURATION.labels(method=method, endpoint=endpoint).observe(duration)
            REQUEST_IN_PROGRESS.labels(method=method, endpoint=endpoint).dec()
            logger.debug(
                "request_metrics_recorded",
                method=method,
                endpoint=endpoint,
                status=status_code,
                duration=duration
            )

        return response

    def _get_endpoint_pattern(self, path: str) -> str:
        """Collapse construction and formula names so label cardinality stays bounded"""
        path = re.sub(r'^/api/v1/constructions/[^/]+', '/api/v1/constructions/{name}', path)
        return re.sub(r'^/api/v1/formulas/[^/]+', '/api/v1/formulas/{family}', path)


def setup_metrics(app):
    """Setup Prometheus metrics middleware"""
    try:
        app.add_middleware(PrometheusMetricsMiddleware)

        @app.get("/metrics", include_in_schema=False)
        async def metrics():
            """Expose Prometheus metrics"""
            return Response(content=generate_latest(), media_type=CONTENT_TYPE_LATEST)

        logger.info("prometheus_metrics_enabled")

    except Exception as e:
        logger.error("metrics_setup_failed", error=str(e))


def record_oracle_search(problem: str, graphs_examined: int, duration: float):
    """Record the work of one exact search"""
    ORACLE_GRAPHS_EXAMINED.labels(problem=problem).inc(graphs_examined)
    ORACLE_DURATION.labels(problem=problem).observe(duration)


def record_construction(name: str, verified: bool):
    CONSTRUCTIONS_BUILT.labels(name=name, verified=str(verified).lower()).inc()


def record_check(kind: str, clean: bool):
    """kind is 'singular' or 'worm'; clean means no witness was found"""
    CHECKS_RUN.labels(kind=kind, outcome="clean" if clean else "witness").inc()
