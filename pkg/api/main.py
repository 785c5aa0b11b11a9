from __future__ import annotations

import asyncio
import json
from datetime import UTC, datetime

import sentry_sdk
from fastapi import FastAPI, File, HTTPException, Query, Request, UploadFile
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response, StreamingResponse
from redis import Redis

from api.queue import CampaignQueue, RedisCampaignQueue
from shared.constants import LIMITS, TERMINAL_STATUSES
from shared.formats import parse_instance, parse_partition
from shared.presets import preset_descriptors
from shared.rate_limit import allow_request
from shared.redis_client import get_redis
from shared.settings import API_RATE_LIMIT_PER_MINUTE, CORS_ALLOW_ORIGINS, SENTRY_DSN
from shared.store import CampaignStore
from shared.types import (
    CampaignRequest,
    CampaignSummary,
    InstanceUploadResponse,
    PresetDescriptor,
    VerifyRequest,
)
from shared.validation import UploadValidationError, validate_instance_upload
from worker.search import verify_partition


if SENTRY_DSN:
    sentry_sdk.init(dsn=SENTRY_DSN, traces_sample_rate=0.0)


def create_app(store: CampaignStore | None = None, queue: CampaignQueue | None = None) -> FastAPI:
    app = FastAPI(title="Tverberg Lab API", version="0.1.0")

    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin.strip() for origin in CORS_ALLOW_ORIGINS.split(",") if origin.strip()],
        allow_methods=["*"],
        allow_headers=["*"],
        allow_credentials=False,
    )

    redis = store.redis if store else get_redis()
    app.state.redis = redis
    app.state.store = store or CampaignStore(redis)
    app.state.queue = queue or RedisCampaignQueue()

    def _store(request: Request) -> CampaignStore:
        return request.app.state.store

    def _redis(request: Request) -> Redis:
        return request.app.state.redis

    def _queue(request: Request) -> CampaignQueue:
        return request.app.state.queue

    def _limit(request: Request, scope: str) -> None:
        ip = request.client.host if request.client else "unknown"
        if not allow_request(_redis(request), scope, ip, limit=API_RATE_LIMIT_PER_MINUTE):
            raise HTTPException(status_code=429, detail="Rate limit exceeded")

    def _campaign_or_404(request: Request, campaign_id: str) -> CampaignSummary:
        campaign = _store(request).get_campaign(campaign_id)
        if campaign is None:
            raise HTTPException(status_code=404, detail="Campaign not found")
        return campaign

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.get("/api/v1/presets", response_model=list[PresetDescriptor])
    def list_presets() -> list[PresetDescriptor]:
        return [PresetDescriptor(**meta) for meta in preset_descriptors()]

    @app.post("/api/v1/instances", response_model=InstanceUploadResponse)
    async def upload_instance(request: Request, file: UploadFile = File(...)) -> InstanceUploadResponse:
        _limit(request, "instances")
        filename = file.filename or "instance.tvb1"
        content = await file.read()
        try:
            text, instance = validate_instance_upload(filename, content)
        except UploadValidationError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

        instance_id, expires_at = _store(request).save_instance(text)
        return InstanceUploadResponse(
            instance_id=instance_id,
            d=instance.d,
            r=instance.r,
            m=instance.coloring.m,
            num_vertices=instance.num_vertices,
            combinatorial=instance.is_combinatorial,
            expires_at=expires_at,
        )

    @app.post("/api/v1/instances/{instance_id}/verify")
    def verify_instance(instance_id: str, request: Request, body: VerifyRequest) -> dict:
        text = _store(request).get_instance_text(instance_id)
        if text is None:
            raise HTTPException(status_code=404, detail="Instance not found or expired")
        instance = parse_instance(text)
        partition = parse_partition(body.partition)
        report = verify_partition(
            instance,
            partition,
            check_geometry=body.check_geometry and not instance.is_combinatorial,
        )
        return {
            "ok": report.ok,
            "structural_ok": report.structural_ok,
            "rainbow_ok": report.rainbow_ok,
            "intersection_ok": report.intersection_ok,
            "caps_ok": report.caps_ok,
            "usage": list(report.usage),
            "first_violation": report.first_violation,
            "structural_issues": list(report.structural_issues),
            "witness": [str(x) for x in report.witness] if report.witness else None,
        }

    @app.post("/api/v1/campaigns", response_model=CampaignSummary)
    def create_campaign(request: Request, body: CampaignRequest) -> CampaignSummary:
        _limit(request, "campaigns")
        store_client = _store(request)
        if store_client.count_active_campaigns() >= LIMITS["concurrent_campaigns_max"]:
            raise HTTPException(
                status_code=429,
                detail=f"Max concurrent campaigns is {LIMITS['concurrent_campaigns_max']}",
            )
        campaign = store_client.create_campaign(mode=body.mode, params=body.params)
        _queue(request).enqueue_campaign(campaign.campaign_id)
        return campaign

    @app.get("/api/v1/campaigns/{campaign_id}", response_model=CampaignSummary)
    def get_campaign(campaign_id: str, request: Request) -> CampaignSummary:
        return _campaign_or_404(request, campaign_id)

    @app.post("/api/v1/campaigns/{campaign_id}/cancel")
    def cancel_campaign(campaign_id: str, request: Request) -> dict[str, str]:
        campaign = _campaign_or_404(request, campaign_id)
        if campaign.status in TERMINAL_STATUSES:
            return {"status": campaign.status}

        store_client = _store(request)
        store_client.request_cancel(campaign_id)
        store_client.update_status(campaign_id, "canceled")
        store_client.append_event(
            campaign_id,
            "campaign.canceled",
            {"requested_at": datetime.now(UTC).isoformat()},
        )
        return {"status": "cancel_requested"}

    @app.get("/api/v1/campaigns/{campaign_id}/report")
    def get_report(campaign_id: str, request: Request) -> Response:
        _campaign_or_404(request, campaign_id)
        report = _store(request).get_report(campaign_id)
        if report is None:
            raise HTTPException(status_code=409, detail="Report not ready")
        return Response(content=report, media_type="application/json")

    @app.get("/api/v1/campaigns/{campaign_id}/events")
    async def stream_events(
        campaign_id: str,
        request: Request,
        from_seq: int = Query(default=1, ge=1),
    ) -> StreamingResponse:
        _campaign_or_404(request, campaign_id)
        store_client = _store(request)

        last_event_id = request.headers.get("last-event-id")
        if last_event_id:
            try:
                from_seq = max(from_seq, int(last_event_id) + 1)
            except ValueError:
                pass

        async def event_generator():
            cursor = from_seq
            while True:
                if await request.is_disconnected():
                    return

                events = store_client.list_events(campaign_id, from_seq=cursor)
                for event in events:
                    cursor = event["seq"] + 1
                    payload = json.dumps(event)
                    yield f"id: {event['seq']}\nevent: {event['type']}\ndata: {payload}\n\n"

                state = store_client.get_campaign(campaign_id)
                if state and state.status in TERMINAL_STATUSES and not events:
                    return

                if not events:
                    yield ": ping\n\n"
                    await asyncio.sleep(0.5)

        return StreamingResponse(
            event_generator(),
            media_type="text/event-stream",
            headers={
                "Cache-Control": "no-cache",
                "Connection": "keep-alive",
                "X-Accel-Buffering": "no",
            },
        )

    @app.exception_handler(ValueError)
    async def value_error_handler(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    return app


app = create_app()
