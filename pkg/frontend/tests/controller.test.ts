import { describe, expect, it } from 'vitest';

import { EditorController } from '../src/controller.js';
import { FakeApi, FakeScheduler, responseFor } from './helpers.js';

const DEBOUNCE = 300;

function makeEditor() {
	const api = new FakeApi();
	const scheduler = new FakeScheduler();
	const controller = new EditorController(api, DEBOUNCE, scheduler);
	return { api, scheduler, controller };
}

describe('live checking', () => {
	it('debounces: no request before the interval elapses', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad');
		await scheduler.advance(DEBOUNCE - 1);
		expect(api.calls.length).toBe(0);
		await scheduler.advance(1);
		expect(api.calls.length).toBe(1);
	});

	it('typing a flagged word produces a highlight after debounce + latency', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad heat', [
			{ surface: 'mad', verdict: 'extra', suggestions: ['made'] },
		]));
		const state = controller.getState();
		expect(state.annotations).toHaveLength(1);
		expect(state.annotations[0].surface).toBe('mad');
		expect(state.annotations[0].verdict).toBe('extra');
		expect(state.stale).toBe(false);
		expect(state.stats?.tokens).toBe(2);
	});

	it('rapid edits coalesce into a single request', async () => {
		const { api, scheduler, controller } = makeEditor();
		for (let i = 1; i <= 50; i++) {
			controller.setDocument('word '.repeat(i));
			await scheduler.advance(10); // keep typing inside the interval
		}
		expect(api.calls.length).toBe(0);
		await scheduler.advance(DEBOUNCE);
		expect(api.calls.length).toBe(1);
	});

	it('keeps at most one request in flight', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('first');
		await scheduler.advance(DEBOUNCE);
		expect(api.calls.length).toBe(1);
		controller.setDocument('first second');
		await scheduler.advance(DEBOUNCE); // debounce fires while call 0 is open
		expect(api.calls.length).toBe(1);
		await api.resolveCall(0, responseFor('first', []));
		expect(api.calls.length).toBe(2); // queued check fires on settle
		expect(api.calls[1].text).toBe('first second');
	});

	it('clearing the document resets highlights and stats without a request', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad', [{ surface: 'mad', verdict: 'extra' }]));
		expect(controller.getState().annotations).toHaveLength(1);
		controller.setDocument('');
		const state = controller.getState();
		expect(state.annotations).toHaveLength(0);
		expect(state.stats).toEqual({
			tokens: 0, allowed: 0, extra: 0, rejected: 0, coverage: null,
		});
		expect(api.calls.length).toBe(1); // nothing new was sent
	});
});

describe('staleness', () => {
	it('discards responses for older revisions and re-checks', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad');
		await scheduler.advance(DEBOUNCE);
		expect(api.calls.length).toBe(1);
		controller.setDocument('made'); // newer revision while call 0 in flight
		// the old response arrives before the new debounce elapses
		await api.resolveCall(0, responseFor('mad', [{ surface: 'mad', verdict: 'extra' }]));
		const state = controller.getState();
		// the stale response never paints on the newer revision
		expect(state.annotations).toHaveLength(0);
		// the newer revision gets its own request once its debounce elapses
		await scheduler.advance(DEBOUNCE);
		expect(api.calls.length).toBe(2);
		await api.resolveCall(1, responseFor('made', []));
		expect(controller.getState().annotations).toHaveLength(0);
		expect(controller.getState().stale).toBe(false);
	});

	it('drops kept highlights whose ranges stop matching after edits', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad heat', [{ surface: 'mad', verdict: 'extra' }]));
		controller.setDocument('Xmad heat'); // shifts the word right
		const state = controller.getState();
		expect(state.stale).toBe(true);
		expect(state.annotations).toHaveLength(0); // range no longer spells "mad"
	});

	it('marks retained highlights stale until the current revision is checked', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad heat', [{ surface: 'mad', verdict: 'extra' }]));
		controller.setDocument('mad heat now'); // edit after the annotated range
		const state = controller.getState();
		expect(state.stale).toBe(true);
		expect(state.annotations).toHaveLength(1); // still matches, kept dimmed
	});
});

describe('suggestions', () => {
	it('accepting a suggestion replaces the range and clears the highlight on recheck', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad heat', [
			{ surface: 'mad', verdict: 'extra', suggestions: ['made'] },
		]));
		const annotation = controller.getState().annotations[0];
		controller.applySuggestion(annotation, 'made');
		expect(controller.getState().document).toBe('made heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(1, responseFor('made heat', []));
		const state = controller.getState();
		expect(state.annotations).toHaveLength(0);
		expect(state.stale).toBe(false);
	});

	it('ignores suggestion clicks on annotations that no longer match', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad heat', [
			{ surface: 'mad', verdict: 'extra', suggestions: ['made'] },
		]));
		const annotation = controller.getState().annotations[0];
		controller.setDocument('hot heat');
		controller.applySuggestion(annotation, 'made');
		expect(controller.getState().document).toBe('hot heat'); // untouched
	});
});

describe('service failures', () => {
	it('raises the offline banner and keeps old highlights', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('mad heat');
		await scheduler.advance(DEBOUNCE);
		await api.resolveCall(0, responseFor('mad heat', [{ surface: 'mad', verdict: 'extra' }]));
		controller.setDocument('mad heat more');
		await scheduler.advance(DEBOUNCE);
		await api.rejectCall(1);
		const state = controller.getState();
		expect(state.offline).toBe(true);
		expect(state.annotations).toHaveLength(1); // retained, shown as stale
		expect(state.stale).toBe(true);
	});

	it('clears the banner once a later check succeeds', async () => {
		const { api, scheduler, controller } = makeEditor();
		controller.setDocument('heat');
		await scheduler.advance(DEBOUNCE);
		await api.rejectCall(0);
		expect(controller.getState().offline).toBe(true);
		controller.checkNow();
		await scheduler.advance(0);
		await api.resolveCall(1, responseFor('heat', []));
		expect(controller.getState().offline).toBe(false);
	});
});
