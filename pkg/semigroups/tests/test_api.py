from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase


class ValidateStructureApiTests(APITestCase):
    def setUp(self):
        self.url = reverse("semigroups-validate")

    def test_valid_structure(self):
        payload = {"order": 2, "table": [[0, 0], [1, 1]], "leq": [[True, True], [False, True]]}

        response = self.client.post(self.url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data, {"ok": True, "violations": [], "structure_key": "2:0011:1101"})

    def test_axiom_violations_are_reported(self):
        payload = {"order": 2, "table": [[0, 1], [1, 0]], "leq": [[True, True], [False, True]]}

        response = self.client.post(self.url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertFalse(response.data["ok"])
        self.assertEqual(
            [v["axiom"] for v in response.data["violations"]],
            ["left-compatibility", "right-compatibility"],
        )

    def test_shape_errors(self):
        payload = {"order": 2, "table": [[0, 0]], "leq": [[True, False], [False, True]]}

        response = self.client.post(self.url, payload, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn("shape", response.data)

    def test_missing_fields(self):
        response = self.client.post(self.url, {"order": 1}, format="json")

        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn("table", response.data)
