import { ServiceClient } from './api.js';
import { EditorController } from './controller.js';
import { mountEditor } from './ui.js';

const params = new URLSearchParams(window.location.search);
const baseUrl =
	params.get('service') ??
	(window as { TENHUNDRED_SERVICE_URL?: string }).TENHUNDRED_SERVICE_URL ??
	'http://127.0.0.1:8100';

const controller = new EditorController(new ServiceClient(baseUrl));
mountEditor(document.getElementById('app')!, controller);
